"""Theories: named axioms, axiom schemas, definitional extensions, builtins.

A theory is an immutable value; every extension returns a new theory and
appends to the definition log so conservativity can be audited. Schemas are
stored as templates with placeholder relations (names starting with '?');
instantiation opens binders with fresh variables, splices the fillers in, and
universally closes any leftover parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from ..errors import TheoryError
from .proof import CertifiedSequent, Sequent
from .syntax import (
    And,
    App,
    Eq,
    Exists,
    Formula,
    Forall,
    FVar,
    Implies,
    Or,
    Rel,
    Signature,
    Sort,
    Term,
    alpha_equal,
    check_well_formed,
    exists,
    forall,
    forall_many,
    free_vars,
    fresh_name,
    iff,
    is_sentence,
    neg,
    open_binder,
    pretty_formula,
    single_sorted,
    substitute,
)


def substitute_parallel(a: Formula, mapping: Mapping[FVar, Term]) -> Formula:
    """Simultaneous capture-free substitution of several free variables."""
    temps = {}
    for i, (x, t) in enumerate(mapping.items()):
        tmp = FVar(f"!tmp{i}", x.sort)
        a = substitute(a, x, tmp)
        temps[tmp] = t
    for tmp, t in temps.items():
        a = substitute(a, tmp, t)
    return a


@dataclass(frozen=True)
class SchemaSlot:
    placeholder: str
    params: tuple[FVar, ...]
    forbidden: frozenset = frozenset()
    quantifier_free: bool = False


@dataclass(frozen=True)
class AxiomSchema:
    """A formula-with-holes plus per-slot side conditions."""

    name: str
    template: Formula
    slots: tuple[SchemaSlot, ...]

    def slot(self, placeholder: str) -> SchemaSlot:
        for s in self.slots:
            if s.placeholder == placeholder:
                return s
        raise TheoryError(f"schema {self.name} has no slot {placeholder}")


def _is_quantifier_free(a: Formula) -> bool:
    match a:
        case Forall() | Exists():
            return False
        case And(left=l, right=r) | Or(left=l, right=r) | Implies(left=l, right=r):
            return _is_quantifier_free(l) and _is_quantifier_free(r)
        case _:
            return True


def instantiate_schema(schema: AxiomSchema, fillers) -> Formula:
    """Build the closed axiom instance; extra free parameters of the fillers
    are implicitly universally quantified on the outside."""
    if len(fillers) != len(schema.slots):
        raise TheoryError(
            f"schema {schema.name} takes {len(schema.slots)} filler(s), got {len(fillers)}"
        )
    by_slot = dict(zip((s.placeholder for s in schema.slots), fillers))
    taken = set()
    for slot, filler in zip(schema.slots, fillers):
        names = {v.name for v in free_vars(filler)}
        bad = names & set(slot.forbidden)
        if bad:
            raise TheoryError(
                f"schema {schema.name}: forbidden variable {sorted(bad)[0]} occurs in the filler"
            )
        if slot.quantifier_free and not _is_quantifier_free(filler):
            raise TheoryError(f"schema {schema.name}: filler must be quantifier-free")
        taken |= names
        taken |= {p.name for p in slot.params}

    def fill(a: Formula) -> Formula:
        match a:
            case Rel(name=n, args=args) if n.startswith("?"):
                slot = schema.slot(n)
                if len(args) != len(slot.params):
                    raise TheoryError(f"schema {schema.name}: bad arity at {n}")
                return substitute_parallel(by_slot[n], dict(zip(slot.params, args)))
            case And(left=l, right=r):
                return And(fill(l), fill(r))
            case Or(left=l, right=r):
                return Or(fill(l), fill(r))
            case Implies(left=l, right=r):
                return Implies(fill(l), fill(r))
            case Forall(sort=s, body=_, hint=h) | Exists(sort=s, body=_, hint=h):
                x = FVar(fresh_name(h or "v", taken), s)
                taken.add(x.name)
                opened = fill(open_binder(a, x))
                return forall(x, opened) if isinstance(a, Forall) else exists(x, opened)
            case _:
                return a

    instance = fill(schema.template)
    extras = sorted(free_vars(instance), key=lambda v: v.name)
    return forall_many(extras, instance)


def schema_recognizes(schema: AxiomSchema, candidate: Formula) -> bool:
    """Is the candidate an instance of the schema (any order of the outer
    parameter quantifiers)?"""
    peeled: list[FVar] = []
    body = candidate
    used = {v.name for v in free_vars(candidate)}

    def try_match(body: Formula, extras: list[FVar]) -> bool:
        occurrences: list[tuple[str, tuple, Formula]] = []

        def walk(tpl: Formula, cand: Formula) -> bool:
            match tpl:
                case Rel(name=n, args=args) if n.startswith("?"):
                    occurrences.append((n, args, cand))
                    return True
                case And(left=l1, right=r1):
                    return (
                        isinstance(cand, And) and walk(l1, cand.left) and walk(r1, cand.right)
                    )
                case Or(left=l1, right=r1):
                    return isinstance(cand, Or) and walk(l1, cand.left) and walk(r1, cand.right)
                case Implies(left=l1, right=r1):
                    return (
                        isinstance(cand, Implies)
                        and walk(l1, cand.left)
                        and walk(r1, cand.right)
                    )
                case Forall(sort=s1) | Exists(sort=s1):
                    if type(cand) is not type(tpl) or cand.sort != s1:
                        return False
                    x = FVar(fresh_name("m", used), s1)
                    used.add(x.name)
                    return walk(open_binder(tpl, x), open_binder(cand, x))
                case _:
                    return tpl == cand

        if not walk(schema.template, body):
            return False
        # solve each slot from an occurrence applied to distinct variables
        fillers: dict[str, Formula] = {}
        for slot in schema.slots:
            hits = [(args, sub) for (n, args, sub) in occurrences if n == slot.placeholder]
            if not hits:
                return False
            solved = None
            for args, sub in hits:
                if all(isinstance(t, FVar) for t in args) and len(set(args)) == len(args):
                    solved = substitute_parallel(sub, dict(zip(args, slot.params)))
                    break
            if solved is None:
                return False
            if slot.quantifier_free and not _is_quantifier_free(solved):
                return False
            fillers[slot.placeholder] = solved
        allowed = set()
        for slot in schema.slots:
            allowed |= set(slot.params)
        allowed |= set(extras)
        for f in fillers.values():
            if not free_vars(f) <= allowed:
                return False
        # verify every occurrence, not just the solving one
        for (n, args, sub) in occurrences:
            slot = schema.slot(n)
            expect = substitute_parallel(fillers[n], dict(zip(slot.params, args)))
            if not alpha_equal(expect, sub):
                return False
        return True

    while True:
        if try_match(body, peeled):
            return True
        if isinstance(body, Forall):
            x = FVar(fresh_name("p", used), body.sort)
            used.add(x.name)
            peeled.append(x)
            body = open_binder(body, x)
        else:
            return False


# ---------------------------------------------------------------------------
# Theories


@dataclass(frozen=True)
class LogEntry:
    kind: str
    name: str
    detail: str = ""


@dataclass(frozen=True)
class Theory:
    name: str
    signature: Signature
    axioms: Mapping[str, Formula] = field(default_factory=dict)
    schemas: Mapping[str, AxiomSchema] = field(default_factory=dict)
    mode: str = "classical"
    definition_log: tuple = ()

    def __post_init__(self):
        if self.mode not in ("classical", "intuitionistic"):
            raise TheoryError(f"unknown logic mode {self.mode}")
        for name, a in self.axioms.items():
            check_well_formed(self.signature, a)
            if not is_sentence(a):
                raise TheoryError(f"axiom {name} is not a sentence")

    def with_axiom(self, name: str, a: Formula) -> "Theory":
        if name in self.axioms:
            raise TheoryError(f"axiom name {name} already used")
        axs = dict(self.axioms)
        axs[name] = a
        return replace(self, axioms=axs)

    def log(self, entry: LogEntry) -> "Theory":
        return replace(self, definition_log=self.definition_log + (entry,))

    def proves_outright(self, a: Formula) -> bool:
        """Is the formula available without proof: an axiom or an instance of
        one of the theory's schemas?"""
        if any(alpha_equal(a, ax) for ax in self.axioms.values()):
            return True
        return any(schema_recognizes(s, a) for s in self.schemas.values())


def pure_theory(sig: Signature | None = None, mode: str = "classical", name: str = "logic") -> Theory:
    return Theory(name=name, signature=sig or single_sorted(), mode=mode)


def _require_certificate(theory: Theory, cert, statement: Formula, what: str) -> None:
    if not isinstance(cert, CertifiedSequent):
        raise TheoryError(f"{what} requires a certified sequent")
    if cert.theory is not theory and cert.theory.axioms != theory.axioms:
        raise TheoryError(f"{what} certificate was checked against a different theory")
    if not alpha_equal(cert.conclusion, statement):
        raise TheoryError(
            f"{what} certificate proves {pretty_formula(cert.conclusion)}, "
            f"expected {pretty_formula(statement)}"
        )
    for h in cert.hypotheses:
        if not theory.proves_outright(h):
            raise TheoryError(
                f"{what} certificate cites {pretty_formula(h)}, which is not in the theory"
            )


def exists_unique(y: FVar, a: Formula) -> Exists:
    """∃!y A per the standard expansion ∃y (A(y) ∧ ∀z (A(z) ⟹ z = y))."""
    taken = {v.name for v in free_vars(a)} | {y.name}
    z = FVar(fresh_name("z", taken), y.sort)
    inner = forall(z, Implies(substitute(a, y, z), Eq(z, y)))
    return exists(y, And(a, inner))


def extend_by_relation(theory: Theory, name: str, definition: Formula, params: tuple[FVar, ...]) -> Theory:
    """Declare R(params) with defining axiom ∀params (R(params) ⟺ definition)."""
    if name in theory.signature.relations or name in theory.signature.functions:
        raise TheoryError(f"symbol {name} already declared")
    if free_vars(definition) != frozenset(params):
        raise TheoryError(
            "the definition's free variables must be exactly the designated parameters"
        )
    check_well_formed(theory.signature, forall_many(params, definition))
    sig = theory.signature.with_relation(name, tuple(p.sort for p in params))
    axiom = forall_many(params, iff(Rel(name, tuple(params)), definition))
    out = replace(theory, signature=sig)
    out = out.with_axiom(f"def_{name}", axiom)
    return out.log(LogEntry("relation-definition", name, pretty_formula(definition)))


def extend_by_function(
    theory: Theory,
    name: str,
    definition: Formula,
    params: tuple[FVar, ...],
    result: FVar,
    uniqueness: CertifiedSequent,
) -> Theory:
    """Definite description: given ⊢ ∀params ∃!result definition, declare f
    with axiom ∀params definition[f(params)/result]."""
    if name in theory.signature.relations or name in theory.signature.functions:
        raise TheoryError(f"symbol {name} already declared")
    if free_vars(definition) != frozenset(params) | {result}:
        raise TheoryError("definition must use exactly the parameters and the result variable")
    statement = forall_many(params, exists_unique(result, definition))
    _require_certificate(theory, uniqueness, statement, "function definition")
    sig = theory.signature.with_function(name, tuple(p.sort for p in params), result.sort)
    witness = App(name, tuple(params))
    axiom = forall_many(params, substitute(definition, result, witness))
    out = replace(theory, signature=sig)
    out = out.with_axiom(f"def_{name}", axiom)
    return out.log(LogEntry("function-definition", name, pretty_formula(definition)))


def decidable_equality(sort: Sort) -> Formula:
    x, y = FVar("x", sort), FVar("y", sort)
    return forall(x, forall(y, Or(Eq(x, y), neg(Eq(x, y)))))


def add_skolem_function(
    theory: Theory,
    name: str,
    definition: Formula,
    params: tuple[FVar, ...],
    result: FVar,
    existence: CertifiedSequent,
) -> Theory:
    """Indefinite description: existence only. Conservative classically, or
    intuitionistically in the presence of decidable equality."""
    if name in theory.signature.relations or name in theory.signature.functions:
        raise TheoryError(f"symbol {name} already declared")
    if theory.mode != "classical":
        wanted = decidable_equality(result.sort)
        if not any(alpha_equal(wanted, ax) for ax in theory.axioms.values()):
            raise TheoryError(
                "indefinite descriptions need classical logic or the decidable-equality axiom"
            )
    if free_vars(definition) != frozenset(params) | {result}:
        raise TheoryError("definition must use exactly the parameters and the result variable")
    statement = forall_many(params, exists(result, definition))
    _require_certificate(theory, existence, statement, "skolem function")
    sig = theory.signature.with_function(name, tuple(p.sort for p in params), result.sort)
    witness = App(name, tuple(params))
    axiom = forall_many(params, substitute(definition, result, witness))
    out = replace(theory, signature=sig)
    out = out.with_axiom(f"def_{name}", axiom)
    return out.log(LogEntry("skolem-function", name, "indefinite-description"))


# ---------------------------------------------------------------------------
# Builtin theories


SET = Sort("set")
NAT = Sort("nat")


def _mem(a: Term, b: Term) -> Rel:
    return Rel("in", (a, b))


def _v(name: str, sort: Sort) -> FVar:
    return FVar(name, sort)


def _is_empty(z: Term) -> Formula:
    w = _v("w0", SET)
    return forall(w, neg(_mem(w, z)))


def _subset_of(z: FVar, x: FVar) -> Formula:
    w = _v("w1", SET)
    return forall(w, Implies(_mem(w, z), _mem(w, x)))


def _is_succ_of(z: FVar, y: FVar) -> Formula:
    w = _v("w2", SET)
    return forall(w, iff(_mem(w, z), Or(_mem(w, y), Eq(w, y))))


def _is_singleton(w: FVar, a: FVar) -> Formula:
    v = _v("v0", SET)
    return forall(v, iff(_mem(v, w), Eq(v, a)))


def _is_upair(w: FVar, a: FVar, b: FVar) -> Formula:
    v = _v("v1", SET)
    return forall(v, iff(_mem(v, w), Or(Eq(v, a), Eq(v, b))))


def _is_kpair(p: FVar, a: FVar, b: FVar) -> Formula:
    w = _v("w3", SET)
    return forall(w, iff(_mem(w, p), Or(_is_singleton(w, a), _is_upair(w, a, b))))


def _in_union(b: FVar, x: FVar) -> Formula:
    w = _v("w4", SET)
    return exists(w, And(_mem(w, x), _mem(b, w)))


def _maps_into(f: FVar, x: FVar) -> Formula:
    p, a, b, b2 = _v("p", SET), _v("a", SET), _v("b", SET), _v("b2", SET)
    members_are_pairs = forall(
        p,
        Implies(
            _mem(p, f),
            exists(a, exists(b, And(_mem(a, x), And(_in_union(b, x), _is_kpair(p, a, b))))),
        ),
    )
    functional = forall(
        a,
        Implies(
            _mem(a, x),
            exists(
                b,
                And(
                    exists(p, And(_mem(p, f), _is_kpair(p, a, b))),
                    forall(
                        b2,
                        Implies(
                            exists(p, And(_mem(p, f), _is_kpair(p, a, b2))),
                            Eq(b2, b),
                        ),
                    ),
                ),
            ),
        ),
    )
    return And(members_are_pairs, functional)


def _app_in(f: FVar, y: FVar) -> Formula:
    b, p = _v("b", SET), _v("p", SET)
    return exists(b, And(exists(p, And(_mem(p, f), _is_kpair(p, y, b))), _mem(b, y)))


def _zf_axioms() -> dict[str, Formula]:
    x, y, z, w = _v("x", SET), _v("y", SET), _v("z", SET), _v("w", SET)
    extensionality = forall(
        x, forall(y, Implies(forall(z, iff(_mem(z, x), _mem(z, y))), Eq(x, y)))
    )
    empty_set = exists(x, forall(y, neg(_mem(y, x))))
    pairing = forall(
        x, forall(y, exists(z, forall(w, iff(_mem(w, z), Or(Eq(w, x), Eq(w, y))))))
    )
    union = forall(
        x, exists(y, forall(z, iff(_mem(z, y), exists(w, And(_mem(w, x), _mem(z, w))))))
    )
    power_set = forall(x, exists(y, forall(z, iff(_mem(z, y), _subset_of(z, x)))))
    infinity = exists(
        x,
        And(
            exists(z, And(_mem(z, x), _is_empty(z))),
            forall(y, Implies(_mem(y, x), exists(z, And(_mem(z, x), _is_succ_of(z, y))))),
        ),
    )
    foundation = forall(
        x,
        Implies(
            exists(y, _mem(y, x)),
            exists(y, And(_mem(y, x), forall(z, Implies(_mem(z, x), neg(_mem(z, y)))))),
        ),
    )
    return {
        "Extensionality": extensionality,
        "EmptySet": empty_set,
        "Pairing": pairing,
        "Union": union,
        "PowerSet": power_set,
        "Infinity": infinity,
        "Foundation": foundation,
    }


def separation_schema() -> AxiomSchema:
    y, z, w = _v("y", SET), _v("z", SET), _v("w", SET)
    slot_w = _v("w", SET)
    template = forall(y, exists(z, forall(w, iff(_mem(w, z), And(_mem(w, y), Rel("?A", (w,)))))))
    return AxiomSchema(
        name="Separation",
        template=template,
        slots=(SchemaSlot("?A", (slot_w,), forbidden=frozenset({"z"})),),
    )


def replacement_schema() -> AxiomSchema:
    x, z, w, u = _v("x", SET), _v("z", SET), _v("w", SET), _v("u", SET)
    sw, sz = _v("w", SET), _v("z", SET)
    functional = forall(z, Implies(_mem(z, x), exists_unique(w, Rel("?A", (z, w)))))
    image = exists(u, forall(w, iff(_mem(w, u), exists(z, And(_mem(z, x), Rel("?A", (z, w)))))))
    template = forall(x, Implies(functional, image))
    return AxiomSchema(
        name="Replacement",
        template=template,
        slots=(SchemaSlot("?A", (sz, sw), forbidden=frozenset({"u"})),),
    )


def _choice_axiom() -> Formula:
    x, z, f, y = _v("x", SET), _v("z", SET), _v("f", SET), _v("y", SET)
    empty_not_in = neg(exists(z, And(_mem(z, x), _is_empty(z))))
    body = exists(f, And(_maps_into(f, x), forall(y, Implies(_mem(y, x), _app_in(f, y)))))
    return forall(x, Implies(empty_not_in, body))


def pra_induction_schema() -> AxiomSchema:
    x = _v("x", NAT)
    sx = _v("x", NAT)
    zero = App("zero", ())
    template = Implies(
        And(Rel("?A", (zero,)), forall(x, Implies(Rel("?A", (x,)), Rel("?A", (App("succ", (x,)),))))),
        forall(x, Rel("?A", (x,))),
    )
    return AxiomSchema(
        name="Induction",
        template=template,
        slots=(SchemaSlot("?A", (sx,), quantifier_free=True),),
    )


def _arith_signature(with_mul: bool = True) -> Signature:
    sig = Signature(sorts=frozenset({NAT}))
    sig = sig.with_function("zero", (), NAT)
    sig = sig.with_function("succ", (NAT,), NAT)
    sig = sig.with_function("plus", (NAT, NAT), NAT)
    if with_mul:
        sig = sig.with_function("times", (NAT, NAT), NAT)
    return sig


def _q_axioms() -> dict[str, Formula]:
    x, y = _v("x", NAT), _v("y", NAT)
    zero = App("zero", ())

    def s(t):
        return App("succ", (t,))

    def plus(a, b):
        return App("plus", (a, b))

    def times(a, b):
        return App("times", (a, b))

    return {
        "SuccNotZero": forall(x, neg(Eq(s(x), zero))),
        "SuccInjective": forall(x, forall(y, Implies(Eq(s(x), s(y)), Eq(x, y)))),
        "Predecessor": forall(x, Implies(neg(Eq(x, zero)), exists(y, Eq(x, s(y))))),
        "AddZero": forall(x, Eq(plus(x, zero), x)),
        "AddSucc": forall(x, forall(y, Eq(plus(x, s(y)), s(plus(x, y))))),
        "MulZero": forall(x, Eq(times(x, zero), zero)),
        "MulSucc": forall(x, forall(y, Eq(times(x, s(y)), plus(times(x, y), x)))),
    }


_ZF_EXPANSION_ORDER = (
    "empty-set",
    "successor y∪{y}",
    "subset",
    "singleton/unordered-pair",
    "kuratowski-pair",
    "union-membership",
    "function-space-membership",
    "function-application",
)


def builtin_theory(name: str) -> Theory:
    """Q, PRA, ZF, or ZFC, with axioms as displayed (defined notions expanded
    into the primitive language)."""
    if name == "Q":
        return Theory(name="Q", signature=_arith_signature(), axioms=_q_axioms(), mode="classical")
    if name == "PRA":
        axioms = {
            k: v
            for k, v in _q_axioms().items()
            if k in ("SuccNotZero", "SuccInjective", "AddZero", "AddSucc", "MulZero", "MulSucc")
        }
        t = Theory(
            name="PRA",
            signature=_arith_signature(),
            axioms=axioms,
            schemas={"Induction": pra_induction_schema()},
            mode="intuitionistic",
        )
        return t.log(LogEntry("theory", "PRA", "finite fragment: plus/times declared"))
    if name in ("ZF", "ZFC"):
        sig = Signature(sorts=frozenset({SET})).with_relation("in", (SET, SET))
        axioms = _zf_axioms()
        if name == "ZFC":
            axioms = dict(axioms)
            axioms["Choice"] = _choice_axiom()
        t = Theory(
            name=name,
            signature=sig,
            axioms=axioms,
            schemas={"Separation": separation_schema(), "Replacement": replacement_schema()},
            mode="classical",
        )
        for step in _ZF_EXPANSION_ORDER:
            t = t.log(LogEntry("notation-expansion", step, "expanded into the ∈-language"))
        return t
    raise TheoryError(f"unknown builtin theory {name}")


def pra_extend(theory: Theory, name: str, arity: int, defining_equations) -> Theory:
    """Declare a primitive recursive function symbol and add its defining
    equations as axioms (quantifier-free, universally closed)."""
    sig = theory.signature.with_function(name, (NAT,) * arity, NAT)
    out = replace(theory, signature=sig)
    for i, eq in enumerate(defining_equations):
        frees = sorted(free_vars(eq), key=lambda v: v.name)
        if not _is_quantifier_free(eq):
            raise TheoryError("defining equations must be quantifier-free")
        out = out.with_axiom(f"def_{name}_{i}", forall_many(frees, eq))
    return out.log(LogEntry("primrec-definition", name, f"arity {arity}"))
