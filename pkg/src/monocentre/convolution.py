"""Day convolution of finite Set-valued functors over a finite monoidal base.

A set functor is stored as one size per object and one table per morphism.
The convolution (F (*) G)(a) is the quotient of the generator set

    (b, c, h: b(x)c -> a, s in Fb, t in Gc)

by the smallest relation identifying (b, c, h.(u(x)v), s, t) with
(b', c', h, Fu s, Gv t) for u: b -> b', v: c -> c'.  Classes are numbered by
their least generator in lexicographic order, which makes every map here
deterministic.  All structure maps (unit, Yoneda comparison, associativity,
braiding) are computed on class representatives and then re-applied to every
generator; a representative-dependent answer raises InternalSoundnessError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import GuardConfig, InternalSoundnessError, SizeGuardExceeded, resolve
from .fincat import FinCategory
from .monoidal import MonoidalStructure, BraidingDatum


class SetFunctor:
    """Finite Set-valued functor: element i of F(a) is the pair (a, i)."""

    def __init__(self, cat: FinCategory, sizes, maps):
        self.cat = cat
        self.sizes = tuple(int(n) for n in sizes)
        self.maps = tuple(tuple(int(v) for v in m) for m in maps)

    def size(self, a):
        return self.sizes[a]

    def apply(self, f, i):
        return self.maps[f][i]

    def __eq__(self, other):
        if not isinstance(other, SetFunctor):
            return NotImplemented
        return (self.cat == other.cat and self.sizes == other.sizes
                and self.maps == other.maps)

    def __hash__(self):
        return hash((self.sizes, self.maps))


def validate_set_functor(F: SetFunctor) -> list[str]:
    cat = F.cat
    if len(F.sizes) != cat.n_objects:
        return [f"{len(F.sizes)} sizes for {cat.n_objects} objects"]
    if len(F.maps) != cat.n_morphisms:
        return [f"{len(F.maps)} maps for {cat.n_morphisms} morphisms"]
    report = []
    for f in cat.morphisms:
        a, b = cat.src(f), cat.dst(f)
        if len(F.maps[f]) != F.sizes[a]:
            report.append(f"map of morphism {f} has wrong domain size")
        elif any(not 0 <= v < F.sizes[b] for v in F.maps[f]):
            report.append(f"map of morphism {f} leaves its codomain")
    if report:
        return report
    for a in cat.objects:
        e = cat.id_of(a)
        if F.maps[e] != tuple(range(F.sizes[a])):
            report.append(f"identity of object {a} does not act as identity")
    for g, f, gf in cat.composition_items():
        for i in range(F.sizes[cat.src(f)]):
            if F.apply(g, F.apply(f, i)) != F.apply(gf, i):
                report.append(f"composition fails on ({g}, {f}) at element {i}")
                break
        if len(report) > 8:
            break
    return report


def check_set_transf(F: SetFunctor, G: SetFunctor, components) -> list[str]:
    """components[a][i] is the image in G(a) of element i of F(a)."""
    cat = F.cat
    if len(components) != cat.n_objects:
        return ["wrong number of components"]
    report = []
    for a in cat.objects:
        comp = components[a]
        if len(comp) != F.sizes[a]:
            report.append(f"component at {a} has wrong domain size")
        elif any(not 0 <= v < G.sizes[a] for v in comp):
            report.append(f"component at {a} leaves its codomain")
    if report:
        return report
    for f in cat.morphisms:
        a, b = cat.src(f), cat.dst(f)
        for i in range(F.sizes[a]):
            if components[b][F.apply(f, i)] != G.apply(f, components[a][i]):
                report.append(f"naturality fails at morphism {f}, element {i}")
                break
    return report


def is_bijection_family(F: SetFunctor, G: SetFunctor, components) -> bool:
    return all(F.sizes[a] == G.sizes[a]
               and len(set(components[a])) == F.sizes[a]
               for a in F.cat.objects)


def yoneda_functor(cat: FinCategory, b) -> SetFunctor:
    """Hom(b, -) with elements numbered by position in the hom list."""
    homs = [cat.hom(b, a) for a in cat.objects]
    pos = [{m: i for i, m in enumerate(h)} for h in homs]
    sizes = tuple(len(h) for h in homs)
    maps = []
    for f in cat.morphisms:
        a, a2 = cat.src(f), cat.dst(f)
        maps.append(tuple(pos[a2][cat.compose(f, m)] for m in homs[a]))
    return SetFunctor(cat, sizes, maps)


def yoneda_elem(cat: FinCategory, b, m) -> int:
    """Position of the morphism m inside Hom(b, dst m)."""
    return cat.hom(b, cat.dst(m)).index(m)


def convolution_unit(ms: MonoidalStructure) -> SetFunctor:
    return yoneda_functor(ms.base, ms.unit)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        # keep the least index as the root so representatives are canonical
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry


@dataclass
class DayTensor:
    ms: MonoidalStructure
    left: SetFunctor
    right: SetFunctor
    functor: SetFunctor
    reps: tuple          # per object: tuple of representative generators
    gen_class: dict      # (b, c, h, s, t) -> (object, class index)

    def class_of(self, b, c, h, s, t):
        return self.gen_class[(b, c, h, s, t)]


def day_convolve(ms: MonoidalStructure, F: SetFunctor, G: SetFunctor,
                 cfg: GuardConfig | None = None) -> DayTensor:
    cfg = resolve(cfg)
    cat = ms.base
    gens = [[] for _ in cat.objects]
    count = 0
    for b in cat.objects:
        for c in cat.objects:
            bc = ms.tensor_obj(b, c)
            for h in cat.out_mors(bc):
                a = cat.dst(h)
                for s in range(F.sizes[b]):
                    for t in range(G.sizes[c]):
                        gens[a].append((b, c, h, s, t))
                        count += 1
                        if count > cfg.max_branch:
                            raise SizeGuardExceeded("convolution generators",
                                                    count, cfg.max_branch)
    gens = [sorted(g) for g in gens]
    gpos = {}
    for a, lst in enumerate(gens):
        for i, q in enumerate(lst):
            gpos[q] = (a, i)

    ufs = [_UnionFind(len(lst)) for lst in gens]
    steps = 0
    for u in cat.morphisms:
        b, b2 = cat.src(u), cat.dst(u)
        for v in cat.morphisms:
            c, c2 = cat.src(v), cat.dst(v)
            uv = ms.tensor_mor(u, v)
            for h in cat.out_mors(ms.tensor_obj(b2, c2)):
                a = cat.dst(h)
                h_uv = cat.compose(h, uv)
                for s in range(F.sizes[b]):
                    for t in range(G.sizes[c]):
                        steps += 1
                        if steps > cfg.max_branch:
                            raise SizeGuardExceeded("convolution relations",
                                                    steps, cfg.max_branch)
                        i = gpos[(b, c, h_uv, s, t)][1]
                        j = gpos[(b2, c2, h, F.apply(u, s), G.apply(v, t))][1]
                        ufs[a].union(i, j)

    reps = []
    gen_class = {}
    sizes = []
    class_pos = []
    for a, lst in enumerate(gens):
        root_to_class = {}
        local = []
        for i, q in enumerate(lst):
            r = ufs[a].find(i)
            if r not in root_to_class:
                root_to_class[r] = len(local)
                local.append(lst[r])
        for i, q in enumerate(lst):
            gen_class[q] = (a, root_to_class[ufs[a].find(i)])
        reps.append(tuple(local))
        sizes.append(len(local))
        class_pos.append(root_to_class)

    maps = []
    for k in cat.morphisms:
        a, a2 = cat.src(k), cat.dst(k)
        table = []
        for (b, c, h, s, t) in reps[a]:
            table.append(gen_class[(b, c, cat.compose(k, h), s, t)][1])
        maps.append(tuple(table))
    out = SetFunctor(cat, sizes, maps)
    internal = validate_set_functor(out)
    if internal:
        raise InternalSoundnessError("convolution is not a functor: " + internal[0])
    # representative independence of the action
    for k in cat.morphisms:
        a = cat.src(k)
        for (b, c, h, s, t) in gens[a]:
            want = maps[k][gen_class[(b, c, h, s, t)][1]]
            got = gen_class[(b, c, cat.compose(k, h), s, t)][1]
            if want != got:
                raise InternalSoundnessError("convolution action depends on "
                                             "the representative")
    return DayTensor(ms, F, G, out, tuple(reps), gen_class)


def _class_map(day: DayTensor, total, name):
    """Apply `total` to every generator, check it is constant on classes,
    and return per-object component tables indexed by class."""
    cat = day.ms.base
    components = []
    for a in cat.objects:
        table = [None] * day.functor.sizes[a]
        for b, c, h, s, t in _gens_of(day, a):
            cls = day.gen_class[(b, c, h, s, t)][1]
            val = total(a, b, c, h, s, t)
            if table[cls] is None:
                table[cls] = val
            elif table[cls] != val:
                raise InternalSoundnessError(f"{name} depends on the representative")
        if any(v is None for v in table):
            raise InternalSoundnessError(f"{name} misses a class")
        components.append(tuple(table))
    return tuple(components)


def _gens_of(day: DayTensor, a):
    for q, (obj, _) in day.gen_class.items():
        if obj == a:
            yield q


def left_unit_components(day: DayTensor):
    """(J (*) F)(a) -> F(a) where J is the unit's representable:
    send (b, c, h, s: e -> b, t) to F(h . (s (x) 1_c) . lambda_inv)(t)."""
    ms = day.ms
    cat = ms.base
    F = day.right
    homs_e = {b: cat.hom(ms.unit, b) for b in cat.objects}

    def total(a, b, c, h, s, t):
        arrow = cat.compose_chain(h, ms.rwhisk(homs_e[b][s], c), ms.lam_inv(c))
        return F.apply(arrow, t)

    return _class_map(day, total, "left unit comparison")


def right_unit_components(day: DayTensor):
    """(F (*) J)(a) -> F(a): send (b, c, h, s, t: e -> c) to
    F(h . (1_b (x) t) . rho_inv)(s)."""
    ms = day.ms
    cat = ms.base
    F = day.left
    homs_e = {c: cat.hom(ms.unit, c) for c in cat.objects}

    def total(a, b, c, h, s, t):
        arrow = cat.compose_chain(h, ms.lwhisk(b, homs_e[c][t]), ms.rho_inv(b))
        return F.apply(arrow, s)

    return _class_map(day, total, "right unit comparison")


def yoneda_components(day: DayTensor, b, c):
    """(y_b (*) y_c)(a) -> y_{b(x)c}(a): send (b', c', h, s, t) to
    h . (s (x) t)."""
    ms = day.ms
    cat = ms.base
    bc = ms.tensor_obj(b, c)
    homs_b = {b2: cat.hom(b, b2) for b2 in cat.objects}
    homs_c = {c2: cat.hom(c, c2) for c2 in cat.objects}

    def total(a, b2, c2, h, s, t):
        arrow = cat.compose(h, ms.tensor_mor(homs_b[b2][s], homs_c[c2][t]))
        return yoneda_elem(cat, bc, arrow)

    return _class_map(day, total, "representable comparison")


def yoneda_inverse_class(day: DayTensor, b, c, k):
    """Class of the generator (b, c, k, id_b, id_c); inverse direction of
    the representable comparison."""
    cat = day.ms.base
    sb = yoneda_elem(cat, b, cat.id_of(b))
    tc = yoneda_elem(cat, c, cat.id_of(c))
    return day.gen_class[(b, c, k, sb, tc)]


def assoc_components(day_fg: DayTensor, day_fg_h: DayTensor,
                     day_gh: DayTensor, day_f_gh: DayTensor):
    """((F (*) G) (*) H)(a) -> (F (*) (G (*) H))(a) by reassociating
    generators through the inverse associator."""
    ms = day_fg.ms
    cat = ms.base

    def total(a, p, c, h, S, t):
        b1, c1, h1, s1, t1 = day_fg.reps[p][S]
        inner = day_gh.gen_class[(c1, c, cat.id_of(ms.tensor_obj(c1, c)), t1, t)]
        arrow = cat.compose_chain(h, ms.rwhisk(h1, c), ms.alpha_inv(b1, c1, c))
        return day_f_gh.gen_class[(b1, inner[0], arrow, s1, inner[1])][1]

    return _class_map(day_fg_h, total, "associativity comparison")


def braid_components(braiding: BraidingDatum, day_fg: DayTensor,
                     day_gf: DayTensor):
    """(F (*) G)(a) -> (G (*) F)(a): precompose the structure morphism with
    the base braiding at the swapped pair."""
    ms = day_fg.ms
    cat = ms.base

    def total(a, b, c, h, s, t):
        arrow = cat.compose(h, braiding.at(c, b))
        return day_gf.gen_class[(c, b, arrow, t, s)][1]

    return _class_map(day_fg, total, "convolution braiding")


def convolve_map(day_src: DayTensor, day_dst: DayTensor, eta, kappa):
    """The convolution of two transformations eta: F => F', kappa: G => G',
    as component tables (F (*) G)(a) -> (F' (*) G')(a)."""

    def total(a, b, c, h, s, t):
        return day_dst.gen_class[(b, c, h, eta[b][s], kappa[c][t])][1]

    return _class_map(day_src, total, "convolution of transformations")


def cardinality_check(day: DayTensor) -> list[str]:
    """On a discrete base the class count at a is the convolution sum
    of the factor sizes over tensor decompositions of a."""
    ms = day.ms
    cat = ms.base
    if any(not cat.is_identity(m) for m in cat.morphisms):
        return ["cardinality law only applies over a discrete base"]
    report = []
    for a in cat.objects:
        want = sum(day.left.sizes[b] * day.right.sizes[c]
                   for b in cat.objects for c in cat.objects
                   if ms.tensor_obj(b, c) == a)
        if day.functor.sizes[a] != want:
            report.append(f"size at object {a} is {day.functor.sizes[a]}, "
                          f"expected {want}")
    return report
