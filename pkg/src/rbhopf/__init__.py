"""Free Rota-Baxter algebras on bracketed words: product, coproduct, antipode."""

from .algebra import LinComb, P, check_rota_baxter, diamond, diamond_basis, gen, rb_operator
from .coalgebra import (
    Tensor2,
    Tensor3,
    check_bialgebra_compat,
    check_coassociativity,
    check_counit_laws,
    coproduct,
    coproduct_basis,
    counit,
    reduced_coproduct,
    tensor2_diamond,
)
from .coeffs import LAMBDA, SYMBOLIC, WEIGHT_ZERO, Coeff, WeightMode, specialize
from .errors import AdjacentBrackets, EmptyWord, ParseError, RBError, UnknownIdentifier, WeightNotZero
from .hopf import (
    LinearMap,
    antipode,
    antipode_lin,
    check_antipode,
    convolution,
    counterexample_weight_nonzero,
    graded_component,
    is_homogeneous,
)
from .textio import (
    export_structured,
    import_structured,
    parse,
    parse_lincomb,
    parse_tensor,
    print_lincomb,
    print_tensor2,
)
from .words import UNIT, Atom, Bracket, Rbw, bracket, enumerate_words, letter, letters, make_word

__version__ = "0.1.0"
