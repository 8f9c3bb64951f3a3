"""Monoidal structure on a finite category, with coherence checking.

A MonoidalStructure stores the tensor tables, the unit object, and the
associator/unitor components explicitly, even when everything is strict.
All checks are exhaustive and exact: pentagon and triangle over all object
tuples, naturality over all morphism tuples, invertibility by table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fincat import FinCategory, Functor, discrete_category

_REPORT_CAP = 12


class MonoidalStructure:
    def __init__(self, base: FinCategory, tensor_obj, tensor_mor, unit,
                 alpha, lam, rho):
        self.base = base
        self._tensor_obj = tuple(tuple(int(x) for x in row) for row in tensor_obj)
        if isinstance(tensor_mor, dict):
            self._tensor_mor = {(int(f), int(g)): int(h) for (f, g), h in tensor_mor.items()}
        else:
            self._tensor_mor = {(int(f), int(g)): int(h) for f, g, h in tensor_mor}
        self.unit = int(unit)
        if isinstance(alpha, dict):
            self._alpha = {(int(a), int(b), int(c)): int(m) for (a, b, c), m in alpha.items()}
        else:
            self._alpha = {(int(a), int(b), int(c)): int(m) for a, b, c, m in alpha}
        self._lam = tuple(int(x) for x in lam)
        self._rho = tuple(int(x) for x in rho)

    def tensor_obj(self, a, b):
        return self._tensor_obj[a][b]

    def tensor_mor(self, f, g):
        return self._tensor_mor[(f, g)]

    def lwhisk(self, a, g):
        """1_a tensor g."""
        return self._tensor_mor[(self.base.id_of(a), g)]

    def rwhisk(self, f, b):
        """f tensor 1_b."""
        return self._tensor_mor[(f, self.base.id_of(b))]

    def alpha(self, a, b, c):
        return self._alpha[(a, b, c)]

    def alpha_inv(self, a, b, c):
        return self.base.inverse(self._alpha[(a, b, c)])

    def lam(self, a):
        return self._lam[a]

    def lam_inv(self, a):
        return self.base.inverse(self._lam[a])

    def rho(self, a):
        return self._rho[a]

    def rho_inv(self, a):
        return self.base.inverse(self._rho[a])

    @property
    def tensor_obj_table(self):
        return self._tensor_obj

    @property
    def tensor_mor_table(self):
        return self._tensor_mor

    @property
    def alpha_table(self):
        return self._alpha

    @property
    def lam_table(self):
        return self._lam

    @property
    def rho_table(self):
        return self._rho

    def __repr__(self):
        return (f"MonoidalStructure({self.base!r}, unit={self.unit})")


def _structural_report(ms: MonoidalStructure) -> list[str]:
    cat = ms.base
    n, m = cat.n_objects, cat.n_morphisms
    report = []
    if len(ms._tensor_obj) != n or any(len(row) != n for row in ms._tensor_obj):
        return ["tensor_obj table is not n x n"]
    for row in ms._tensor_obj:
        for v in row:
            if not 0 <= v < n:
                return [f"tensor_obj value {v} out of range"]
    if not 0 <= ms.unit < n:
        return [f"unit object {ms.unit} out of range"]
    if len(ms._lam) != n or len(ms._rho) != n:
        return ["unitor tables do not cover all objects"]
    for f in cat.morphisms:
        for g in cat.morphisms:
            h = ms._tensor_mor.get((f, g))
            if h is None:
                report.append(f"tensor_mor missing at ({f}, {g})")
                continue
            if (cat.src(h) != ms.tensor_obj(cat.src(f), cat.src(g))
                    or cat.dst(h) != ms.tensor_obj(cat.dst(f), cat.dst(g))):
                report.append(f"tensor_mor({f}, {g}) = {h} has wrong endpoints")
    for a in cat.objects:
        for b in cat.objects:
            for c in cat.objects:
                mor = ms._alpha.get((a, b, c))
                if mor is None:
                    report.append(f"associator missing at ({a}, {b}, {c})")
                    continue
                src = ms.tensor_obj(ms.tensor_obj(a, b), c)
                dst = ms.tensor_obj(a, ms.tensor_obj(b, c))
                if cat.src(mor) != src or cat.dst(mor) != dst:
                    report.append(f"associator at ({a}, {b}, {c}) has wrong endpoints")
                elif not cat.is_invertible(mor):
                    report.append(f"associator at ({a}, {b}, {c}) is not invertible")
    for a in cat.objects:
        lm, rm = ms._lam[a], ms._rho[a]
        if cat.src(lm) != ms.tensor_obj(ms.unit, a) or cat.dst(lm) != a:
            report.append(f"left unitor at {a} has wrong endpoints")
        elif not cat.is_invertible(lm):
            report.append(f"left unitor at {a} is not invertible")
        if cat.src(rm) != ms.tensor_obj(a, ms.unit) or cat.dst(rm) != a:
            report.append(f"right unitor at {a} has wrong endpoints")
        elif not cat.is_invertible(rm):
            report.append(f"right unitor at {a} is not invertible")
    return report


def _functoriality_report(ms: MonoidalStructure) -> list[str]:
    cat = ms.base
    report = []
    for a in cat.objects:
        for b in cat.objects:
            if ms.tensor_mor(cat.id_of(a), cat.id_of(b)) != cat.id_of(ms.tensor_obj(a, b)):
                report.append(f"tensor of identities at ({a}, {b}) is not an identity")
    pairs = [(g, f) for (g, f) in cat.compose_map if cat.src(g) == cat.dst(f)]
    for (g2, f2) in pairs:
        for (g1, f1) in pairs:
            lhs = ms.tensor_mor(cat.compose(g2, f2), cat.compose(g1, f1))
            rhs = cat.compose(ms.tensor_mor(g2, g1), ms.tensor_mor(f2, f1))
            if lhs != rhs:
                report.append(f"tensor does not preserve composition at (({g2},{f2}), ({g1},{f1}))")
                if len(report) > _REPORT_CAP:
                    return report
    return report


def _naturality_report(ms: MonoidalStructure) -> list[str]:
    cat = ms.base
    report = []
    mors = list(cat.morphisms)
    for f in mors:
        for g in mors:
            for h in mors:
                a, b, c = cat.src(f), cat.src(g), cat.src(h)
                lhs = cat.compose(ms.alpha(cat.dst(f), cat.dst(g), cat.dst(h)),
                                  ms.tensor_mor(ms.tensor_mor(f, g), h))
                rhs = cat.compose(ms.tensor_mor(f, ms.tensor_mor(g, h)),
                                  ms.alpha(a, b, c))
                if lhs != rhs:
                    report.append(f"associator not natural at morphisms ({f}, {g}, {h})")
                    if len(report) > _REPORT_CAP:
                        return report
    for f in mors:
        a, b = cat.src(f), cat.dst(f)
        if cat.compose(ms.lam(b), ms.lwhisk(ms.unit, f)) != cat.compose(f, ms.lam(a)):
            report.append(f"left unitor not natural at morphism {f}")
        if cat.compose(ms.rho(b), ms.rwhisk(f, ms.unit)) != cat.compose(f, ms.rho(a)):
            report.append(f"right unitor not natural at morphism {f}")
    return report


def check_pentagon_triangle(ms: MonoidalStructure) -> list[str]:
    """Pentagon over all object quadruples, triangle over all pairs.

    Reports the first failing tuple of each kind; non-invertible coherence
    components are reported distinctly (and first, since composites with
    them are not trustworthy).
    """
    structural = _structural_report(ms)
    if structural:
        return structural
    cat = ms.base
    report = []
    done_pentagon = False
    for a in cat.objects:
        if done_pentagon:
            break
        for b in cat.objects:
            if done_pentagon:
                break
            for c in cat.objects:
                if done_pentagon:
                    break
                for d in cat.objects:
                    lhs = cat.compose(ms.alpha(a, b, ms.tensor_obj(c, d)),
                                      ms.alpha(ms.tensor_obj(a, b), c, d))
                    rhs = cat.compose_chain(ms.lwhisk(a, ms.alpha(b, c, d)),
                                            ms.alpha(a, ms.tensor_obj(b, c), d),
                                            ms.rwhisk(ms.alpha(a, b, c), d))
                    if lhs != rhs:
                        report.append(f"pentagon fails at objects ({a}, {b}, {c}, {d})")
                        done_pentagon = True
                        break
    for a in cat.objects:
        found = False
        for b in cat.objects:
            lhs = cat.compose(ms.lwhisk(a, ms.lam(b)), ms.alpha(a, ms.unit, b))
            rhs = ms.rwhisk(ms.rho(a), b)
            if lhs != rhs:
                report.append(f"triangle fails at objects ({a}, {b})")
                found = True
                break
        if found:
            break
    return report


def validate_monoidal(ms: MonoidalStructure) -> list[str]:
    """Full battery: structure, bifunctoriality, naturality, coherence."""
    report = _structural_report(ms)
    if report:
        return report
    report += _functoriality_report(ms)
    report += _naturality_report(ms)
    report += check_pentagon_triangle(ms)
    return report


# -- braidings ----------------------------------------------------------


class BraidingDatum:
    def __init__(self, ms: MonoidalStructure, components):
        self.ms = ms
        if isinstance(components, dict):
            self._c = {(int(a), int(b)): int(m) for (a, b), m in components.items()}
        else:
            self._c = {(int(a), int(b)): int(m) for a, b, m in components}

    def at(self, a, b):
        return self._c[(a, b)]

    @property
    def table(self):
        return self._c


def check_braiding(br: BraidingDatum) -> list[str]:
    """Endpoints, invertibility, naturality, and both hexagon identities."""
    ms = br.ms
    cat = ms.base
    report = []
    for a in cat.objects:
        for b in cat.objects:
            mor = br._c.get((a, b))
            if mor is None:
                report.append(f"braiding missing at ({a}, {b})")
                continue
            if cat.src(mor) != ms.tensor_obj(a, b) or cat.dst(mor) != ms.tensor_obj(b, a):
                report.append(f"braiding at ({a}, {b}) has wrong endpoints")
            elif not cat.is_invertible(mor):
                report.append(f"braiding at ({a}, {b}) is not invertible")
    if report:
        return report
    for f in cat.morphisms:
        for g in cat.morphisms:
            a, b = cat.src(f), cat.src(g)
            lhs = cat.compose(br.at(cat.dst(f), cat.dst(g)), ms.tensor_mor(f, g))
            rhs = cat.compose(ms.tensor_mor(g, f), br.at(a, b))
            if lhs != rhs:
                report.append(f"braiding not natural at morphisms ({f}, {g})")
                if len(report) > _REPORT_CAP:
                    return report
    for a in cat.objects:
        for b in cat.objects:
            for c in cat.objects:
                bc = ms.tensor_obj(b, c)
                lhs = cat.compose_chain(ms.alpha(b, c, a), br.at(a, bc), ms.alpha(a, b, c))
                rhs = cat.compose_chain(ms.lwhisk(b, br.at(a, c)), ms.alpha(b, a, c),
                                        ms.rwhisk(br.at(a, b), c))
                if lhs != rhs:
                    report.append(f"first hexagon fails at ({a}, {b}, {c})")
                ab = ms.tensor_obj(a, b)
                lhs2 = cat.compose_chain(ms.alpha_inv(c, a, b), br.at(ab, c),
                                         ms.alpha_inv(a, b, c))
                rhs2 = cat.compose_chain(ms.rwhisk(br.at(a, c), b), ms.alpha_inv(a, c, b),
                                         ms.lwhisk(a, br.at(b, c)))
                if lhs2 != rhs2:
                    report.append(f"second hexagon fails at ({a}, {b}, {c})")
                if len(report) > _REPORT_CAP:
                    return report
    return report


def identity_braiding(ms: MonoidalStructure) -> BraidingDatum:
    """The identity-component braiding; valid when the tensor is symmetric
    as a table and the identities satisfy the hexagons (e.g. abelian
    discrete fixtures and monoidal posets)."""
    cat = ms.base
    comps = {}
    for a in cat.objects:
        for b in cat.objects:
            if ms.tensor_obj(a, b) != ms.tensor_obj(b, a):
                raise ValueError(f"tensor not symmetric on objects at ({a}, {b})")
            comps[(a, b)] = cat.id_of(ms.tensor_obj(a, b))
    return BraidingDatum(ms, comps)


# -- strong monoidal functors --------------------------------------------


class StrongMonoidalFunctor:
    def __init__(self, functor: Functor, src_monoidal: MonoidalStructure,
                 dst_monoidal: MonoidalStructure, tensor_iso, unit_iso):
        self.functor = functor
        self.src_monoidal = src_monoidal
        self.dst_monoidal = dst_monoidal
        if isinstance(tensor_iso, dict):
            self._phi = {(int(a), int(b)): int(m) for (a, b), m in tensor_iso.items()}
        else:
            self._phi = {(int(a), int(b)): int(m) for a, b, m in tensor_iso.items()}
        self.unit_iso = int(unit_iso)

    def phi(self, a, b):
        return self._phi[(a, b)]

    @property
    def phi_table(self):
        return self._phi


def check_strong_monoidal(sm: StrongMonoidalFunctor) -> list[str]:
    F = sm.functor
    A, B = sm.src_monoidal, sm.dst_monoidal
    catA, catB = A.base, B.base
    report = []
    ui = sm.unit_iso
    if catB.src(ui) != B.unit or catB.dst(ui) != F.obj_map[A.unit]:
        report.append("unit cell has wrong endpoints")
    elif not catB.is_invertible(ui):
        report.append("unit cell is not invertible")
    for a in catA.objects:
        for b in catA.objects:
            mor = sm._phi.get((a, b))
            if mor is None:
                report.append(f"tensor cell missing at ({a}, {b})")
                continue
            src = B.tensor_obj(F.obj_map[a], F.obj_map[b])
            dst = F.obj_map[A.tensor_obj(a, b)]
            if catB.src(mor) != src or catB.dst(mor) != dst:
                report.append(f"tensor cell at ({a}, {b}) has wrong endpoints")
            elif not catB.is_invertible(mor):
                report.append(f"tensor cell at ({a}, {b}) is not invertible")
    if report:
        return report
    for f in catA.morphisms:
        for g in catA.morphisms:
            a, b = catA.src(f), catA.src(g)
            lhs = catB.compose(sm.phi(catA.dst(f), catA.dst(g)),
                               B.tensor_mor(F.mor_map[f], F.mor_map[g]))
            rhs = catB.compose(F.mor_map[A.tensor_mor(f, g)], sm.phi(a, b))
            if lhs != rhs:
                report.append(f"tensor cell not natural at morphisms ({f}, {g})")
                if len(report) > _REPORT_CAP:
                    return report
    for a in catA.objects:
        for b in catA.objects:
            for c in catA.objects:
                fa, fb, fc = F.obj_map[a], F.obj_map[b], F.obj_map[c]
                lhs = catB.compose_chain(F.mor_map[A.alpha(a, b, c)],
                                         sm.phi(A.tensor_obj(a, b), c),
                                         B.rwhisk(sm.phi(a, b), fc))
                rhs = catB.compose_chain(sm.phi(a, A.tensor_obj(b, c)),
                                         B.lwhisk(fa, sm.phi(b, c)),
                                         B.alpha(fa, fb, fc))
                if lhs != rhs:
                    report.append(f"associativity compatibility fails at ({a}, {b}, {c})")
                    if len(report) > _REPORT_CAP:
                        return report
    for a in catA.objects:
        fa = F.obj_map[a]
        lhs = catB.compose_chain(F.mor_map[A.lam(a)], sm.phi(A.unit, a),
                                 B.rwhisk(sm.unit_iso, fa))
        if lhs != B.lam(fa):
            report.append(f"left unit compatibility fails at {a}")
        rhs = catB.compose_chain(F.mor_map[A.rho(a)], sm.phi(a, A.unit),
                                 B.lwhisk(fa, sm.unit_iso))
        if rhs != B.rho(fa):
            report.append(f"right unit compatibility fails at {a}")
    return report


def identity_strong_monoidal(ms: MonoidalStructure) -> StrongMonoidalFunctor:
    cat = ms.base
    F = Functor(cat, cat, tuple(cat.objects), tuple(cat.morphisms))
    phi = {(a, b): cat.id_of(ms.tensor_obj(a, b)) for a in cat.objects for b in cat.objects}
    return StrongMonoidalFunctor(F, ms, ms, phi, cat.id_of(ms.unit))


def strict_cells_functor(F: Functor, src_ms: MonoidalStructure,
                         dst_ms: MonoidalStructure) -> StrongMonoidalFunctor:
    """Wrap F with identity structure cells.  Only meaningful when F
    preserves tensor and unit on the nose; check_strong_monoidal will
    report endpoint failures otherwise."""
    catB = dst_ms.base
    phi = {}
    for a in src_ms.base.objects:
        for b in src_ms.base.objects:
            src = dst_ms.tensor_obj(F.obj_map[a], F.obj_map[b])
            phi[(a, b)] = catB.id_of(src)
    return StrongMonoidalFunctor(F, src_ms, dst_ms, phi, catB.id_of(dst_ms.unit))


# -- fixtures -------------------------------------------------------------


def group_table_report(table) -> list[str]:
    """Check a multiplication table for associativity, identity, inverses."""
    n = len(table)
    report = []
    for row in table:
        if len(row) != n or any(not 0 <= v < n for v in row):
            return ["table is not a square over element indices"]
    ident = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        report.append("no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    report.append(f"not associative at ({a}, {b}, {c})")
                    return report
    if ident is not None:
        for a in range(n):
            if not any(table[a][b] == ident and table[b][a] == ident for b in range(n)):
                report.append(f"element {a} has no inverse")
    return report


def discrete_group_monoidal(table) -> MonoidalStructure:
    """Strict monoidal structure on the discrete category of a finite group."""
    problems = group_table_report(table)
    if problems:
        raise ValueError("not a group table: " + "; ".join(problems))
    n = len(table)
    cat = discrete_category(n)
    unit = next(e for e in range(n)
                if all(table[e][x] == x and table[x][e] == x for x in range(n)))
    tensor_mor = {(a, b): table[a][b] for a in range(n) for b in range(n)}
    alpha = {(a, b, c): table[table[a][b]][c]
             for a in range(n) for b in range(n) for c in range(n)}
    ids = tuple(range(n))
    return MonoidalStructure(cat, table, tensor_mor, unit, alpha, ids, ids)


def chain_poset_monoidal(n: int = 2) -> MonoidalStructure:
    """The chain 0 <= 1 <= ... <= n-1 with tensor = min and unit = top."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a <= b]
    mor_of = {p: i for i, p in enumerate(pairs)}
    src = tuple(a for a, _ in pairs)
    dst = tuple(b for _, b in pairs)
    ident = tuple(mor_of[(a, a)] for a in range(n))
    comp = {}
    for g, (b1, c) in enumerate(pairs):
        for f, (a, b2) in enumerate(pairs):
            if b1 == b2:
                comp[(g, f)] = mor_of[(a, c)]
    cat = FinCategory(n, src, dst, ident, comp)
    tobj = [[min(a, b) for b in range(n)] for a in range(n)]
    tmor = {}
    for f, (a, b) in enumerate(pairs):
        for g, (c, d) in enumerate(pairs):
            tmor[(f, g)] = mor_of[(min(a, c), min(b, d))]
    alpha = {(a, b, c): ident[min(a, b, c)]
             for a in range(n) for b in range(n) for c in range(n)}
    lam = tuple(ident[min(n - 1, a)] for a in range(n))
    rho = tuple(ident[min(a, n - 1)] for a in range(n))
    return MonoidalStructure(cat, tobj, tmor, n - 1, alpha, lam, rho)


def one_object_z2_monoidal(broken_pentagon: bool = False) -> MonoidalStructure:
    """One object, endomorphisms {id, s} with s . s = id, tensor of
    morphisms = their product.  With broken_pentagon the associator is s,
    which is natural and invertible but fails the pentagon (s != id)."""
    cat = FinCategory(1, (0, 0), (0, 0), (0,),
                      {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 0})
    tmor = {(f, g): (f + g) % 2 for f in range(2) for g in range(2)}
    a = 1 if broken_pentagon else 0
    return MonoidalStructure(cat, ((0,),), tmor, 0, {(0, 0, 0): a}, (0,), (0,))


@dataclass
class RelabelledMonoidal:
    monoidal: MonoidalStructure
    iso: StrongMonoidalFunctor       # from the original to the relabelled copy


def relabel_monoidal(ms: MonoidalStructure, obj_perm, mor_perm) -> RelabelledMonoidal:
    """Transport the whole structure along a renaming of object and
    morphism ids; returns the copy plus the induced strict isomorphism."""
    cat = ms.base
    op = tuple(obj_perm)
    mp = tuple(mor_perm)
    n, m = cat.n_objects, cat.n_morphisms
    if sorted(op) != list(range(n)) or sorted(mp) != list(range(m)):
        raise ValueError("relabelling must be a pair of permutations")
    inv_o = [0] * n
    for i, v in enumerate(op):
        inv_o[v] = i
    inv_m = [0] * m
    for i, v in enumerate(mp):
        inv_m[v] = i
    src = tuple(op[cat.src(inv_m[k])] for k in range(m))
    dst = tuple(op[cat.dst(inv_m[k])] for k in range(m))
    ident = tuple(mp[cat.id_of(inv_o[o])] for o in range(n))
    comp = {(mp[g], mp[f]): mp[h] for (g, f), h in cat.compose_map.items()}
    new_cat = FinCategory(n, src, dst, ident, comp)
    tobj = [[op[ms.tensor_obj(inv_o[a], inv_o[b])] for b in range(n)] for a in range(n)]
    tmor = {(mp[f], mp[g]): mp[h] for (f, g), h in ms.tensor_mor_table.items()}
    alpha = {(op[a], op[b], op[c]): mp[mor] for (a, b, c), mor in ms.alpha_table.items()}
    lam = [0] * n
    rho = [0] * n
    for a in cat.objects:
        lam[op[a]] = mp[ms.lam(a)]
        rho[op[a]] = mp[ms.rho(a)]
    new_ms = MonoidalStructure(new_cat, tobj, tmor, op[ms.unit], alpha, lam, rho)
    F = Functor(cat, new_cat, op, mp)
    phi = {(a, b): new_cat.id_of(new_ms.tensor_obj(op[a], op[b]))
           for a in cat.objects for b in cat.objects}
    iso = StrongMonoidalFunctor(F, ms, new_ms, phi, new_cat.id_of(new_ms.unit))
    return RelabelledMonoidal(new_ms, iso)


# shared group tables for fixtures and tests

Z2 = ((0, 1), (1, 0))
Z3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
Z4 = tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))


def _s3_table():
    import itertools
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # composition: (p * q)(i) = p(q(i)); identity lands at index 0
    return tuple(tuple(index[tuple(p[q[i]] for i in range(3))] for q in perms)
                 for p in perms)


S3 = _s3_table()
