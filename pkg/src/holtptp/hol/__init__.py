"""Types, terms, and the operations every translation builds on."""

from .logic import (
    connective_app,
    dest_binder,
    dest_eq,
    list_mk_forall,
    mk_and,
    mk_eq,
    mk_exists,
    mk_forall,
    mk_imp,
    mk_neg,
    mk_or,
)
from .normalize import expand_equational_lambdas, generalize
from .signature import (
    LOGICAL_CONSTANTS,
    Sequent,
    Signature,
    check_prop,
    type_args,
    type_args_for,
    typecheck,
)
from .terms import (
    Abs,
    App,
    Const,
    Term,
    Var,
    alpha_eq,
    beta_normalize,
    free_vars,
    inst_type,
    mk_abs,
    mk_comb,
    strip_comb,
    subst,
    term_type_vars,
)
from .types import (
    BOOL,
    IND,
    HolType,
    TyApp,
    TyVar,
    fun,
    fun_of,
    is_basic_monomorphic,
    is_monomorphic,
    match_generic,
    type_vars,
)
