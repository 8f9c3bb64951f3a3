"""Finite 2-categorical limit gadgets: iso-inserters, equifiers, cotensors
with the arrow category, and descent objects of truncated pseudo-cosimplicial
diagrams.

The descent object is computed twice on every call: once directly from its
defining conditions and once through the inserter-then-equifier pipeline.
The two answers are compared morphism by morphism and a mismatch raises
InternalSoundnessError, so neither construction is ever trusted alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import GuardConfig, InternalSoundnessError, SizeGuardExceeded, resolve
from .fincat import (
    FinCategory, Functor, NatTransf, functor_category, full_subcategory,
    walking_arrow, validate_functor, validate_nat_transf,
)


@dataclass
class Inserter:
    """Universal category of pairs (object of the source, invertible
    comparison between the two functor images)."""
    category: FinCategory
    objects: tuple            # (a, iso id in the target)
    mor_table: tuple          # (src idx, dst idx, source-category morphism)
    projection: Functor


def iso_inserter(F: Functor, G: Functor, cfg: GuardConfig | None = None) -> Inserter:
    if F.src != G.src or F.dst != G.dst:
        raise ValueError("iso_inserter needs a parallel pair of functors")
    cfg = resolve(cfg)
    A, B = F.src, F.dst
    objs = []
    for a in A.objects:
        for m in B.invertible_hom(F.obj_map[a], G.obj_map[a]):
            objs.append((a, m))
    objs.sort()
    if len(objs) > cfg.max_objects:
        raise SizeGuardExceeded("inserter objects", len(objs), cfg.max_objects)
    mor_table = []
    for i, (a, m) in enumerate(objs):
        for j, (b, mm) in enumerate(objs):
            for f in A.hom(a, b):
                if B.compose(G.mor_map[f], m) == B.compose(mm, F.mor_map[f]):
                    mor_table.append((i, j, f))
    mor_table.sort()
    mor_index = {t: k for k, t in enumerate(mor_table)}
    src = tuple(t[0] for t in mor_table)
    dst = tuple(t[1] for t in mor_table)
    ident = tuple(mor_index[(i, i, A.id_of(a))] for i, (a, _) in enumerate(objs))
    comp = {}
    by_src = {}
    for k, t in enumerate(mor_table):
        by_src.setdefault(t[0], []).append(k)
    for k1, (i1, j1, f1) in enumerate(mor_table):
        for k2 in by_src.get(j1, ()):
            i2, j2, f2 = mor_table[k2]
            key = (i1, j2, A.compose(f2, f1))
            if key not in mor_index:
                raise InternalSoundnessError("inserter is not closed under composition")
            comp[(k2, k1)] = mor_index[key]
    cat = FinCategory(len(objs), src, dst, ident, comp)
    proj = Functor(cat, A, tuple(a for a, _ in objs),
                   tuple(t[2] for t in mor_table))
    return Inserter(cat, tuple(objs), tuple(mor_table), proj)


@dataclass
class Equifier:
    category: FinCategory
    kept: tuple               # retained object ids of the ambient category
    inclusion: Functor


def equifier(sigma: NatTransf, tau: NatTransf,
             cfg: GuardConfig | None = None) -> Equifier:
    """Full subcategory where two parallel transformations agree."""
    if sigma.src != tau.src or sigma.dst != tau.dst:
        raise ValueError("equifier needs a parallel pair of transformations")
    A = sigma.src.src
    kept = tuple(a for a in A.objects
                 if sigma.components[a] == tau.components[a])
    sub = full_subcategory(A, kept)
    return Equifier(sub.category, kept, sub.inclusion)


@dataclass
class CotensorArrow:
    """The cotensor of a category with the single-arrow category: its
    objects are the arrows, with evaluation at each end and the generic
    arrow connecting the two evaluations."""
    category: FinCategory
    functors: tuple
    source_eval: Functor
    target_eval: Functor
    generic_arrow: NatTransf


def cotensor_with_arrow(A: FinCategory, cfg: GuardConfig | None = None) -> CotensorArrow:
    cfg = resolve(cfg)
    fc = functor_category(walking_arrow(), A, cfg)
    n = fc.category.n_objects
    src_eval = Functor(fc.category, A,
                       tuple(H.obj_map[0] for H in fc.functors),
                       tuple(eta.components[0] for eta in fc.transfs))
    dst_eval = Functor(fc.category, A,
                       tuple(H.obj_map[1] for H in fc.functors),
                       tuple(eta.components[1] for eta in fc.transfs))
    generic = NatTransf(src_eval, dst_eval,
                        tuple(fc.functors[i].mor_map[2] for i in range(n)))
    report = validate_nat_transf(generic)
    if report:
        raise InternalSoundnessError("generic arrow is not natural: " + report[0])
    return CotensorArrow(fc.category, fc.functors, src_eval, dst_eval, generic)


# -- truncated pseudo-cosimplicial diagrams and their descent objects ------


@dataclass
class TruncatedCosimplicial:
    """Three levels, two cofaces up, three cofaces up again, and the three
    invertible coherence cells replacing the strict cosimplicial identities:

        coh00: e0.d0 => e1.d0    coh01: e0.d1 => e2.d0    coh21: e2.d1 => e1.d1
    """
    X0: FinCategory
    X1: FinCategory
    X2: FinCategory
    d0: Functor
    d1: Functor
    e0: Functor
    e1: Functor
    e2: Functor
    coh00: NatTransf
    coh01: NatTransf
    coh21: NatTransf


def validate_cosimplicial(T: TruncatedCosimplicial) -> list[str]:
    report = []
    for name, F, s, d in (("d0", T.d0, T.X0, T.X1), ("d1", T.d1, T.X0, T.X1),
                          ("e0", T.e0, T.X1, T.X2), ("e1", T.e1, T.X1, T.X2),
                          ("e2", T.e2, T.X1, T.X2)):
        if F.src != s or F.dst != d:
            report.append(f"{name} has wrong endpoints")
        else:
            report.extend(f"{name}: {line}" for line in validate_functor(F))
    if report:
        return report
    cells = (("coh00", T.coh00, T.d0.then(T.e0), T.d0.then(T.e1)),
             ("coh01", T.coh01, T.d1.then(T.e0), T.d0.then(T.e2)),
             ("coh21", T.coh21, T.d1.then(T.e2), T.d1.then(T.e1)))
    for name, cell, want_src, want_dst in cells:
        if cell.src != want_src or cell.dst != want_dst:
            report.append(f"{name} does not sit between the required composites")
            continue
        report.extend(f"{name}: {line}" for line in validate_nat_transf(cell))
        for x in T.X0.objects:
            if not T.X2.is_invertible(cell.components[x]):
                report.append(f"{name} component at {x} is not invertible")
    return report


@dataclass
class DescentResult:
    category: FinCategory
    objects: tuple            # (x in X0, gluing iso in X1)
    mor_table: tuple          # (src idx, dst idx, X0 morphism)
    projection: Functor


def _cocycle_sides(T: TruncatedCosimplicial, x, m):
    lhs = T.X2.compose(T.e1.mor_map[m], T.coh00.components[x])
    rhs = T.X2.compose_chain(T.coh21.components[x], T.e2.mor_map[m],
                             T.coh01.components[x], T.e0.mor_map[m])
    return lhs, rhs


def descent_object(T: TruncatedCosimplicial,
                   cfg: GuardConfig | None = None) -> DescentResult:
    """Objects are pairs (x, m: d0 x -> d1 x invertible) whose two induced
    level-two composites agree; morphisms are X0-morphisms compatible with
    the gluing."""
    cfg = resolve(cfg)
    report = validate_cosimplicial(T)
    if report:
        raise ValueError("not a valid truncated diagram: " + report[0])

    objs = []
    for x in T.X0.objects:
        for m in T.X1.invertible_hom(T.d0.obj_map[x], T.d1.obj_map[x]):
            lhs, rhs = _cocycle_sides(T, x, m)
            if lhs == rhs:
                objs.append((x, m))
    objs.sort()
    if len(objs) > cfg.max_objects:
        raise SizeGuardExceeded("descent objects", len(objs), cfg.max_objects)
    mor_table = []
    for i, (x, m) in enumerate(objs):
        for j, (y, mm) in enumerate(objs):
            for f in T.X0.hom(x, y):
                if (T.X1.compose(T.d1.mor_map[f], m)
                        == T.X1.compose(mm, T.d0.mor_map[f])):
                    mor_table.append((i, j, f))
    mor_table.sort()
    mor_index = {t: k for k, t in enumerate(mor_table)}
    src = tuple(t[0] for t in mor_table)
    dst = tuple(t[1] for t in mor_table)
    ident = tuple(mor_index[(i, i, T.X0.id_of(x))] for i, (x, _) in enumerate(objs))
    comp = {}
    by_src = {}
    for k, t in enumerate(mor_table):
        by_src.setdefault(t[0], []).append(k)
    for k1, (i1, j1, f1) in enumerate(mor_table):
        for k2 in by_src.get(j1, ()):
            i2, j2, f2 = mor_table[k2]
            key = (i1, j2, T.X0.compose(f2, f1))
            if key not in mor_index:
                raise InternalSoundnessError("descent category not closed under composition")
            comp[(k2, k1)] = mor_index[key]
    cat = FinCategory(len(objs), src, dst, ident, comp)
    proj = Functor(cat, T.X0, tuple(x for x, _ in objs),
                   tuple(t[2] for t in mor_table))

    # independent route: inserter on the cofaces, then equify the two
    # induced level-two cells
    ins = iso_inserter(T.d0, T.d1, cfg)
    S = ins.projection.then(T.d0).then(T.e0)
    D = ins.projection.then(T.d1).then(T.e1)
    sig, tau = [], []
    for (x, m) in ins.objects:
        lhs, rhs = _cocycle_sides(T, x, m)
        sig.append(lhs)
        tau.append(rhs)
    sigma_cell = NatTransf(S, D, tuple(sig))
    tau_cell = NatTransf(S, D, tuple(tau))
    for name, cell in (("first induced cell", sigma_cell),
                       ("second induced cell", tau_cell)):
        bad = validate_nat_transf(cell)
        if bad:
            raise InternalSoundnessError(f"{name} is not natural: {bad[0]}")
    eq = equifier(sigma_cell, tau_cell, cfg)
    pipeline_objs = tuple(ins.objects[k] for k in eq.kept)
    if pipeline_objs != tuple(objs):
        raise InternalSoundnessError("descent routes disagree on objects")
    pipeline_mors = []
    kept_pos = {k: i for i, k in enumerate(eq.kept)}
    for (i, j, f) in ins.mor_table:
        if i in kept_pos and j in kept_pos:
            pipeline_mors.append((kept_pos[i], kept_pos[j], f))
    if sorted(pipeline_mors) != list(mor_table):
        raise InternalSoundnessError("descent routes disagree on morphisms")
    return DescentResult(cat, tuple(objs), tuple(mor_table), proj)
