"""Simply typed lambda calculus with Nat/Bool/products/sums."""

from .syntax import (  # noqa: F401
    App, Arrow, Base, BoolT, Cases, Cond, Const, FF, Free, Inj0, Inj1, Lam,
    NatT, Pair, Prod, Proj0, Proj1, RecNat, SimpleType, Succ, SumT, Term, TT,
    Var, VOID, Zero, abstract_free, beta_reduce, free_names, numeral,
    numeral_value, shift, subst, var_free_in,
)
from .typing import TypingContext, infer_type, pretty_type  # noqa: F401
from .reduce import (  # noqa: F401
    BETA_ETA, BETA_ONLY, DEFAULT_FLAGS, LEFTMOST_OUTERMOST,
    RIGHTMOST_INNERMOST, ReductionFlags, contract, equal_beta_eta, normalize,
    reduce_step,
)
from .bridge import efq, formula_to_type, from_nd, to_nd, type_to_formula  # noqa: F401
from .generate import CORPUS_SEED, gen_closed_nat, gen_term, gen_type, term_size  # noqa: F401
