"""Finite categories as explicit composition tables.

Objects and morphisms are dense integer ids.  A category is four tables:
morphism sources, morphism targets, the identity morphism of each object,
and the composition partial map (g, f) -> g . f defined exactly on the
composable pairs.  Everything downstream (functor enumeration, centres,
descent objects) is exhaustive search over these tables, so the encodings
stay canonical and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import GuardConfig, SizeGuardExceeded, resolve


class FinCategory:
    """A finite category over dense integer ids."""

    def __init__(self, n_objects, mor_src, mor_dst, identity, composition):
        self._n_objects = int(n_objects)
        self._mor_src = tuple(int(x) for x in mor_src)
        self._mor_dst = tuple(int(x) for x in mor_dst)
        self._identity = tuple(int(x) for x in identity)
        if isinstance(composition, dict):
            self._compose = {(int(g), int(f)): int(h) for (g, f), h in composition.items()}
        else:
            self._compose = {(int(g), int(f)): int(h) for g, f, h in composition}
        self._hash = None
        self._hom = None
        self._inverse = None
        self._out = None
        self._in = None

    # -- table access -------------------------------------------------

    @property
    def n_objects(self):
        return self._n_objects

    @property
    def objects(self):
        return range(self._n_objects)

    @property
    def n_morphisms(self):
        return len(self._mor_src)

    @property
    def morphisms(self):
        return range(len(self._mor_src))

    @property
    def mor_src(self):
        return self._mor_src

    @property
    def mor_dst(self):
        return self._mor_dst

    @property
    def identity(self):
        return self._identity

    def src(self, m):
        return self._mor_src[m]

    def dst(self, m):
        return self._mor_dst[m]

    def id_of(self, a):
        return self._identity[a]

    def is_identity(self, m):
        a = self._mor_src[m]
        return self._mor_dst[m] == a and self._identity[a] == m

    def composition_items(self):
        """Sorted (g, f, g.f) triples; the canonical serialization."""
        return tuple(sorted((g, f, h) for (g, f), h in self._compose.items()))

    @property
    def compose_map(self):
        """The raw (g, f) -> g.f dict.  Treat as read-only."""
        return self._compose

    def compose(self, g, f):
        try:
            return self._compose[(g, f)]
        except KeyError:
            raise ValueError(f"morphisms not composable: {g} after {f}") from None

    def compose_chain(self, *mors):
        """compose_chain(h, g, f) = h . g . f (rightmost applied first)."""
        out = mors[-1]
        for m in reversed(mors[:-1]):
            out = self.compose(m, out)
        return out

    # -- derived structure ---------------------------------------------

    def _build_hom(self):
        hom = {}
        out = [[] for _ in range(self._n_objects)]
        inc = [[] for _ in range(self._n_objects)]
        for m, (a, b) in enumerate(zip(self._mor_src, self._mor_dst)):
            hom.setdefault((a, b), []).append(m)
            out[a].append(m)
            inc[b].append(m)
        self._hom = hom
        self._out = [tuple(x) for x in out]
        self._in = [tuple(x) for x in inc]

    def hom(self, a, b):
        if self._hom is None:
            self._build_hom()
        return self._hom.get((a, b), [])

    def out_mors(self, a):
        if self._out is None:
            self._build_hom()
        return self._out[a]

    def in_mors(self, b):
        if self._in is None:
            self._build_hom()
        return self._in[b]

    def _build_inverses(self):
        inv = {}
        ident = self._identity
        srcs = self._mor_src
        comp = self._compose
        for (g, f), h in comp.items():
            if h == ident[srcs[f]] and comp.get((f, g)) == ident[srcs[g]]:
                inv[f] = g
        self._inverse = inv

    def is_invertible(self, m):
        if self._inverse is None:
            self._build_inverses()
        return m in self._inverse

    def inverse(self, m):
        if self._inverse is None:
            self._build_inverses()
        return self._inverse[m]

    def invertible_hom(self, a, b):
        return [m for m in self.hom(a, b) if self.is_invertible(m)]

    def are_isomorphic(self, a, b):
        return a == b or bool(self.invertible_hom(a, b))

    # -- identity-table equality and hashing ----------------------------

    def _key(self):
        return (self._n_objects, self._mor_src, self._mor_dst, self._identity,
                self.composition_items())

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self._n_objects == other._n_objects
                and self._mor_src == other._mor_src
                and self._mor_dst == other._mor_dst
                and self._identity == other._identity
                and self._compose == other._compose)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        return f"FinCategory({self._n_objects} objects, {self.n_morphisms} morphisms)"


def validate_category(cat: FinCategory) -> list[str]:
    """Return every violated category axiom; empty iff cat is a category.

    Malformed tables (out-of-range ids, wrong lengths) are reported rather
    than raised, and suppress the deeper axiom checks they would crash.
    """
    report = []
    n = cat.n_objects
    m = cat.n_morphisms
    srcs, dsts, ident = cat.mor_src, cat.mor_dst, cat.identity

    if len(ident) != n:
        report.append(f"identity table has {len(ident)} entries for {n} objects")
        return report
    malformed = False
    for mor in range(m):
        if not (0 <= srcs[mor] < n and 0 <= dsts[mor] < n):
            report.append(f"morphism {mor} has out-of-range endpoints ({srcs[mor]}, {dsts[mor]})")
            malformed = True
    for a in range(n):
        if not (0 <= ident[a] < m):
            report.append(f"identity of object {a} is out of range: {ident[a]}")
            malformed = True
    for (g, f), h in cat.compose_map.items():
        if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
            report.append(f"composition entry ({g}, {f}) -> {h} has out-of-range ids")
            malformed = True
    if malformed:
        return report

    for a in range(n):
        e = ident[a]
        if srcs[e] != a or dsts[e] != a:
            report.append(f"identity of object {a} is morphism {e}: {srcs[e]} -> {dsts[e]}")

    comp = cat.compose_map
    for (g, f), h in sorted(comp.items()):
        if srcs[g] != dsts[f]:
            report.append(f"compose defined on non-composable pair ({g}, {f})")
            continue
        if srcs[h] != srcs[f] or dsts[h] != dsts[g]:
            report.append(f"composite of ({g}, {f}) has wrong endpoints: morphism {h}")
    for b in range(n):
        for f in cat.in_mors(b):
            for g in cat.out_mors(b):
                if (g, f) not in comp:
                    report.append(f"composition missing on composable pair ({g}, {f})")

    for mor in range(m):
        e_dst = ident[dsts[mor]]
        e_src = ident[srcs[mor]]
        if comp.get((e_dst, mor)) != mor:
            report.append(f"left identity law fails at morphism {mor}")
        if comp.get((mor, e_src)) != mor:
            report.append(f"right identity law fails at morphism {mor}")

    for (g, f), gf in comp.items():
        if srcs[g] != dsts[f]:
            continue
        for h in cat.out_mors(dsts[g]):
            left = comp.get((h, gf))
            hg = comp.get((h, g))
            right = comp.get((hg, f)) if hg is not None else None
            if left != right or left is None:
                report.append(f"associativity fails at ({h}, {g}, {f})")
    return report


class Functor:
    """A functor between finite categories, as object and morphism tables."""

    def __init__(self, src, dst, obj_map, mor_map):
        self.src = src
        self.dst = dst
        self.obj_map = tuple(int(x) for x in obj_map)
        self.mor_map = tuple(int(x) for x in mor_map)
        self._hash = None

    def on_obj(self, a):
        return self.obj_map[a]

    def on_mor(self, m):
        return self.mor_map[m]

    def then(self, other: "Functor") -> "Functor":
        """Diagram-order composite: (self.then(g))(x) = g(self(x))."""
        if self.dst is not other.src and self.dst != other.src:
            raise ValueError("functors not composable")
        return Functor(self.src, other.dst,
                       tuple(other.obj_map[a] for a in self.obj_map),
                       tuple(other.mor_map[m] for m in self.mor_map))

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.obj_map == other.obj_map and self.mor_map == other.mor_map
                and self.src == other.src and self.dst == other.dst)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.obj_map, self.mor_map, self.src, self.dst))
        return self._hash

    def __repr__(self):
        return f"Functor(obj_map={self.obj_map}, mor_map={self.mor_map})"


def identity_functor(cat: FinCategory) -> Functor:
    return Functor(cat, cat, tuple(cat.objects), tuple(cat.morphisms))


def constant_functor(src: FinCategory, dst: FinCategory, at_obj: int) -> Functor:
    e = dst.id_of(at_obj)
    return Functor(src, dst, (at_obj,) * src.n_objects, (e,) * src.n_morphisms)


def validate_functor(F: Functor) -> list[str]:
    report = []
    A, B = F.src, F.dst
    if len(F.obj_map) != A.n_objects or len(F.mor_map) != A.n_morphisms:
        return [f"table lengths {len(F.obj_map)}/{len(F.mor_map)} do not match the source"]
    for a in A.objects:
        if not 0 <= F.obj_map[a] < B.n_objects:
            return [f"object {a} maps out of range"]
    for m in A.morphisms:
        fm = F.mor_map[m]
        if not 0 <= fm < B.n_morphisms:
            return [f"morphism {m} maps out of range"]
        if B.src(fm) != F.obj_map[A.src(m)] or B.dst(fm) != F.obj_map[A.dst(m)]:
            report.append(f"morphism {m} maps to {fm} with wrong endpoints")
    for a in A.objects:
        if F.mor_map[A.id_of(a)] != B.id_of(F.obj_map[a]):
            report.append(f"identity of object {a} is not preserved")
    for (g, f), h in A.compose_map.items():
        if A.src(g) != A.dst(f):
            continue
        if B.compose_map.get((F.mor_map[g], F.mor_map[f])) != F.mor_map[h]:
            report.append(f"composition not preserved on ({g}, {f})")
    return report


class NatTransf:
    """A natural transformation, as a tuple of component morphism ids."""

    def __init__(self, src: Functor, dst: Functor, components):
        self.src = src
        self.dst = dst
        self.components = tuple(int(x) for x in components)
        self._hash = None

    def at(self, a):
        return self.components[a]

    def __eq__(self, other):
        if not isinstance(other, NatTransf):
            return NotImplemented
        return (self.components == other.components and self.src == other.src
                and self.dst == other.dst)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.components, self.src, self.dst))
        return self._hash

    def __repr__(self):
        return f"NatTransf(components={self.components})"


def validate_nat_transf(eta: NatTransf) -> list[str]:
    F, G = eta.src, eta.dst
    if F.src is not G.src and F.src != G.src:
        return ["source functors do not share a domain"]
    if F.dst is not G.dst and F.dst != G.dst:
        return ["source functors do not share a codomain"]
    A, B = F.src, F.dst
    if len(eta.components) != A.n_objects:
        return [f"{len(eta.components)} components for {A.n_objects} objects"]
    report = []
    for a in A.objects:
        c = eta.components[a]
        if not 0 <= c < B.n_morphisms:
            return [f"component at {a} out of range"]
        if B.src(c) != F.obj_map[a] or B.dst(c) != G.obj_map[a]:
            report.append(f"component at {a} has wrong endpoints")
    if report:
        return report
    for m in A.morphisms:
        a, b = A.src(m), A.dst(m)
        left = B.compose_map.get((eta.components[b], F.mor_map[m]))
        right = B.compose_map.get((G.mor_map[m], eta.components[a]))
        if left != right or left is None:
            report.append(f"naturality fails at morphism {m}")
    return report


def vertical_compose(later: NatTransf, earlier: NatTransf) -> NatTransf:
    """later . earlier for earlier: F => G, later: G => H."""
    if later.src != earlier.dst:
        raise ValueError("transformations not vertically composable")
    B = earlier.src.dst
    comps = tuple(B.compose(later.components[a], earlier.components[a])
                  for a in earlier.src.src.objects)
    return NatTransf(earlier.src, later.dst, comps)


def whisker_pre(eta: NatTransf, F: Functor) -> NatTransf:
    """eta . F : (G o F) => (H o F) for eta: G => H, F landing in G's domain."""
    return NatTransf(F.then(eta.src), F.then(eta.dst),
                     tuple(eta.components[F.obj_map[a]] for a in F.src.objects))


def whisker_post(K: Functor, eta: NatTransf) -> NatTransf:
    """K . eta : (K o G) => (K o H) for eta: G => H into K's domain."""
    return NatTransf(eta.src.then(K), eta.dst.then(K),
                     tuple(K.mor_map[c] for c in eta.components))


# -- basic shapes -------------------------------------------------------


def discrete_category(n: int) -> FinCategory:
    ids = tuple(range(n))
    return FinCategory(n, ids, ids, ids, {(i, i): i for i in range(n)})


def terminal_category() -> FinCategory:
    return discrete_category(1)


def empty_category() -> FinCategory:
    return discrete_category(0)


def walking_arrow() -> FinCategory:
    # objects 0, 1; morphism 2 is the arrow 0 -> 1
    comp = {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2}
    return FinCategory(2, (0, 1, 0), (0, 1, 1), (0, 1), comp)


# -- products, coproducts, subcategories ---------------------------------


@dataclass
class ProductCategory:
    category: FinCategory
    left: FinCategory
    right: FinCategory
    proj_left: Functor
    proj_right: Functor

    def obj_id(self, a, b):
        return a * self.right.n_objects + b

    def obj_pair(self, o):
        nb = self.right.n_objects
        return divmod(o, nb)

    def mor_id(self, f, g):
        return f * self.right.n_morphisms + g

    def mor_pair(self, m):
        nm = self.right.n_morphisms
        return divmod(m, nm)

    def pair(self, F: Functor, G: Functor) -> Functor:
        """The functor X -> A x B induced by F: X -> A and G: X -> B."""
        if F.src != G.src:
            raise ValueError("pairing needs functors with a common domain")
        obj = tuple(self.obj_id(F.obj_map[x], G.obj_map[x]) for x in F.src.objects)
        mor = tuple(self.mor_id(F.mor_map[m], G.mor_map[m]) for m in F.src.morphisms)
        return Functor(F.src, self.category, obj, mor)


def product_category(A: FinCategory, B: FinCategory, cfg: GuardConfig | None = None) -> ProductCategory:
    cfg = resolve(cfg)
    n_obj = A.n_objects * B.n_objects
    n_mor = A.n_morphisms * B.n_morphisms
    if n_obj > cfg.max_objects:
        raise SizeGuardExceeded("product category objects", n_obj, cfg.max_objects)
    if n_mor > cfg.max_morphisms:
        raise SizeGuardExceeded("product category morphisms", n_mor, cfg.max_morphisms)
    nmb = B.n_morphisms
    src = []
    dst = []
    for f in A.morphisms:
        for g in B.morphisms:
            src.append(A.src(f) * B.n_objects + B.src(g))
            dst.append(A.dst(f) * B.n_objects + B.dst(g))
    ident = tuple(A.id_of(a) * nmb + B.id_of(b)
                  for a in A.objects for b in B.objects)
    comp = {}
    for (g2, f2), h2 in A.compose_map.items():
        if A.src(g2) != A.dst(f2):
            continue
        for (g1, f1), h1 in B.compose_map.items():
            if B.src(g1) != B.dst(f1):
                continue
            comp[(g2 * nmb + g1, f2 * nmb + f1)] = h2 * nmb + h1
    cat = FinCategory(n_obj, src, dst, ident, comp)
    pl = Functor(cat, A, tuple(o // B.n_objects for o in cat.objects),
                 tuple(m // nmb for m in cat.morphisms))
    pr = Functor(cat, B, tuple(o % B.n_objects for o in cat.objects),
                 tuple(m % nmb for m in cat.morphisms))
    return ProductCategory(cat, A, B, pl, pr)


@dataclass
class CoproductCategory:
    category: FinCategory
    inj_left: Functor
    inj_right: Functor


def coproduct_category(A: FinCategory, B: FinCategory) -> CoproductCategory:
    n_obj = A.n_objects + B.n_objects
    src = list(A.mor_src) + [s + A.n_objects for s in B.mor_src]
    dst = list(A.mor_dst) + [d + A.n_objects for d in B.mor_dst]
    ident = list(A.identity) + [e + A.n_morphisms for e in B.identity]
    comp = dict(A.compose_map)
    off = A.n_morphisms
    for (g, f), h in B.compose_map.items():
        comp[(g + off, f + off)] = h + off
    cat = FinCategory(n_obj, src, dst, ident, comp)
    il = Functor(A, cat, tuple(A.objects), tuple(A.morphisms))
    ir = Functor(B, cat, tuple(o + A.n_objects for o in B.objects),
                 tuple(m + off for m in B.morphisms))
    return CoproductCategory(cat, il, ir)


@dataclass
class Subcategory:
    category: FinCategory
    obj_map: tuple      # new object id -> ambient object id
    mor_map: tuple      # new morphism id -> ambient morphism id
    inclusion: Functor


def full_subcategory(cat: FinCategory, objects) -> Subcategory:
    objs = sorted(set(objects))
    oset = set(objs)
    new_obj = {o: i for i, o in enumerate(objs)}
    mors = [m for m in cat.morphisms if cat.src(m) in oset and cat.dst(m) in oset]
    new_mor = {m: i for i, m in enumerate(mors)}
    src = tuple(new_obj[cat.src(m)] for m in mors)
    dst = tuple(new_obj[cat.dst(m)] for m in mors)
    ident = tuple(new_mor[cat.id_of(o)] for o in objs)
    comp = {}
    for g in mors:
        for f in mors:
            if cat.src(g) == cat.dst(f):
                comp[(new_mor[g], new_mor[f])] = new_mor[cat.compose(g, f)]
    sub = FinCategory(len(objs), src, dst, ident, comp)
    incl = Functor(sub, cat, tuple(objs), tuple(mors))
    return Subcategory(sub, tuple(objs), tuple(mors), incl)


# -- exhaustive enumeration ----------------------------------------------


class _Budget:
    def __init__(self, limit, what):
        self.limit = limit
        self.what = what
        self.used = 0

    def spend(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise SizeGuardExceeded(self.what, f"more than {self.used} steps", self.limit)


def enumerate_functors(A: FinCategory, B: FinCategory,
                       cfg: GuardConfig | None = None) -> list[Functor]:
    """All functors A -> B, in lexicographic (obj_map, mor_map) order.

    Backtracking over object images, then over images of the non-identity
    morphisms with incremental composition-consistency pruning.
    """
    cfg = resolve(cfg)
    budget = _Budget(cfg.max_branch, "functor enumeration")
    if A.n_objects == 0:
        return [Functor(A, B, (), ())]
    if B.n_objects == 0:
        return []

    nonid = [m for m in A.morphisms if not A.is_identity(m)]
    pos = {m: i for i, m in enumerate(nonid)}
    n_steps = len(nonid)
    # triple (g, f, h) is checkable once the last non-identity member is set
    triples_at = [[] for _ in range(n_steps)]
    for (g, f), h in A.compose_map.items():
        if A.src(g) != A.dst(f):
            continue
        members = [pos[m] for m in (g, f, h) if m in pos]
        if members:
            triples_at[max(members)].append((g, f, h))

    out: list[Functor] = []
    obj_map = [0] * A.n_objects
    mor_map = [0] * A.n_morphisms

    def mor_choices(m):
        return B.hom(obj_map[A.src(m)], obj_map[A.dst(m)])

    def assign_mors(step):
        if step == n_steps:
            out.append(Functor(A, B, tuple(obj_map), tuple(mor_map)))
            return
        m = nonid[step]
        for cand in mor_choices(m):
            budget.spend()
            mor_map[m] = cand
            ok = True
            for (g, f, h) in triples_at[step]:
                if B.compose_map.get((mor_map[g], mor_map[f])) != mor_map[h]:
                    ok = False
                    break
            if ok:
                assign_mors(step + 1)

    def assign_objs(a):
        if a == A.n_objects:
            for o in A.objects:
                mor_map[A.id_of(o)] = B.id_of(obj_map[o])
            assign_mors(0)
            return
        for cand in B.objects:
            budget.spend()
            obj_map[a] = cand
            assign_objs(a + 1)

    assign_objs(0)
    return out


def enumerate_nat_transfs(F: Functor, G: Functor,
                          cfg: GuardConfig | None = None) -> list[NatTransf]:
    """All natural transformations F => G, components in lexicographic order."""
    cfg = resolve(cfg)
    budget = _Budget(cfg.max_branch, "natural transformation enumeration")
    A, B = F.src, F.dst
    n = A.n_objects
    if n == 0:
        return [NatTransf(F, G, ())]
    check_at = [[] for _ in range(n)]
    for m in A.morphisms:
        check_at[max(A.src(m), A.dst(m))].append(m)
    comps = [0] * n
    out = []

    def assign(a):
        if a == n:
            out.append(NatTransf(F, G, tuple(comps)))
            return
        for cand in B.hom(F.obj_map[a], G.obj_map[a]):
            budget.spend()
            comps[a] = cand
            ok = True
            for m in check_at[a]:
                left = B.compose_map.get((comps[A.dst(m)], F.mor_map[m]))
                right = B.compose_map.get((G.mor_map[m], comps[A.src(m)]))
                if left != right or left is None:
                    ok = False
                    break
            if ok:
                assign(a + 1)

    assign(0)
    return out


# -- functor categories ---------------------------------------------------


@dataclass
class FunctorCategory:
    category: FinCategory
    source: FinCategory
    target: FinCategory
    functors: tuple          # object id -> Functor
    transfs: tuple           # morphism id -> NatTransf
    functor_index: dict      # (obj_map, mor_map) -> object id
    transf_index: dict = field(repr=False)  # (src id, dst id, components) -> morphism id

    def index_of_functor(self, F: Functor) -> int:
        return self.functor_index[(F.obj_map, F.mor_map)]

    def index_of_transf(self, src_idx, dst_idx, components) -> int:
        return self.transf_index[(src_idx, dst_idx, tuple(components))]


def functor_category(A: FinCategory, B: FinCategory,
                     cfg: GuardConfig | None = None) -> FunctorCategory:
    """The category of functors A -> B and all natural transformations."""
    cfg = resolve(cfg)
    functors = enumerate_functors(A, B, cfg)
    if len(functors) > cfg.max_objects:
        raise SizeGuardExceeded("functor category objects", len(functors), cfg.max_objects,
                                hint="raise max_objects to proceed")
    findex = {(F.obj_map, F.mor_map): i for i, F in enumerate(functors)}
    by_objmap: dict[tuple, list[int]] = {}
    for i, F in enumerate(functors):
        by_objmap.setdefault(F.obj_map, []).append(i)

    nonid = [m for m in A.morphisms if not A.is_identity(m)]
    raw: list[tuple[int, int, tuple]] = []
    budget = _Budget(cfg.max_branch, "functor category morphism enumeration")
    for fi, F in enumerate(functors):
        out_lists = [B.out_mors(F.obj_map[a]) for a in A.objects]
        # walk every family of componentwise choices out of F
        stack = [0] * A.n_objects
        n = A.n_objects

        def families(a):
            if a == n:
                target = tuple(B.dst(stack[o]) for o in range(n))
                for gi in by_objmap.get(target, ()):
                    G = functors[gi]
                    ok = True
                    for m in nonid:
                        sa, sb = A.src(m), A.dst(m)
                        left = B.compose_map.get((stack[sb], F.mor_map[m]))
                        right = B.compose_map.get((G.mor_map[m], stack[sa]))
                        if left != right or left is None:
                            ok = False
                            break
                    if ok:
                        raw.append((fi, gi, tuple(stack)))
                return
            for cand in out_lists[a]:
                budget.spend()
                stack[a] = cand
                families(a + 1)

        families(0)

    raw.sort()
    if len(raw) > cfg.max_morphisms:
        raise SizeGuardExceeded("functor category morphisms", len(raw), cfg.max_morphisms,
                                hint="raise max_morphisms to proceed")
    transfs = tuple(NatTransf(functors[s], functors[d], comps) for s, d, comps in raw)
    tindex = {key: i for i, key in enumerate(raw)}
    src = tuple(k[0] for k in raw)
    dst = tuple(k[1] for k in raw)
    ident = tuple(tindex[(i, i, tuple(B.id_of(F.obj_map[a]) for a in A.objects))]
                  for i, F in enumerate(functors))
    by_src: dict[int, list[int]] = {}
    for i, k in enumerate(raw):
        by_src.setdefault(k[0], []).append(i)
    comp = {}
    for t1_id, (s1, d1, c1) in enumerate(raw):
        for t2_id in by_src.get(d1, ()):
            s2, d2, c2 = raw[t2_id]
            composed = tuple(B.compose(c2[a], c1[a]) for a in A.objects)
            comp[(t2_id, t1_id)] = tindex[(s1, d2, composed)]
    cat = FinCategory(len(functors), src, dst, ident, comp)
    return FunctorCategory(cat, A, B, tuple(functors), transfs, findex, tindex)


def curry(H: Functor, prod: ProductCategory, fc: FunctorCategory) -> Functor:
    """Transpose H: A x B -> C to a functor A -> [B, C].

    Here prod is the product A x B, fc is the functor category [B, C],
    and H is a functor prod.category -> C.
    """
    A, B = prod.left, prod.right
    C = H.dst
    obj_map = []
    for a in A.objects:
        slice_obj = tuple(H.obj_map[prod.obj_id(a, b)] for b in B.objects)
        slice_mor = tuple(H.mor_map[prod.mor_id(A.id_of(a), g)] for g in B.morphisms)
        obj_map.append(fc.functor_index[(slice_obj, slice_mor)])
    mor_map = []
    for f in A.morphisms:
        comps = tuple(H.mor_map[prod.mor_id(f, B.id_of(b))] for b in B.objects)
        mor_map.append(fc.index_of_transf(obj_map[A.src(f)], obj_map[A.dst(f)], comps))
    return Functor(A, fc.category, tuple(obj_map), tuple(mor_map))


def uncurry(K: Functor, prod: ProductCategory, fc: FunctorCategory) -> Functor:
    """Inverse transpose: K: A -> [B, C] back to A x B -> C."""
    A, B = prod.left, prod.right
    C = fc.target
    obj_map = []
    for o in prod.category.objects:
        a, b = prod.obj_pair(o)
        obj_map.append(fc.functors[K.obj_map[a]].obj_map[b])
    mor_map = []
    for m in prod.category.morphisms:
        f, g = prod.mor_pair(m)
        eta = fc.transfs[K.mor_map[f]]
        Fa2 = fc.functors[K.obj_map[A.dst(f)]]
        mor_map.append(C.compose(Fa2.mor_map[g], eta.components[B.src(g)]))
    return Functor(prod.category, C, tuple(obj_map), tuple(mor_map))


@dataclass
class EvaluationResult:
    product: ProductCategory
    functor: Functor


def evaluation_functor(fc: FunctorCategory, cfg: GuardConfig | None = None) -> EvaluationResult:
    """The evaluation functor [A, B] x A -> B."""
    cfg = resolve(cfg)
    A, B = fc.source, fc.target
    prod = product_category(fc.category, A, cfg)
    obj_map = []
    for o in prod.category.objects:
        fi, a = prod.obj_pair(o)
        obj_map.append(fc.functors[fi].obj_map[a])
    mor_map = []
    for m in prod.category.morphisms:
        t, f = prod.mor_pair(m)
        eta = fc.transfs[t]
        G = eta.dst
        mor_map.append(B.compose(G.mor_map[f], eta.components[A.src(f)]))
    return EvaluationResult(prod, Functor(prod.category, B, tuple(obj_map), tuple(mor_map)))


# -- equivalence checking --------------------------------------------------


@dataclass
class EquivalenceReport:
    functor: Functor
    faithful: bool
    full: bool
    essentially_surjective: bool
    witnesses: tuple

    @property
    def is_equivalence(self):
        return self.faithful and self.full and self.essentially_surjective

    def summary(self):
        if self.is_equivalence:
            return "equivalence"
        return "not an equivalence: " + "; ".join(self.witnesses)


def check_equivalence(F: Functor) -> EquivalenceReport:
    """Decide full + faithful + essentially surjective by exhaustion."""
    A, B = F.src, F.dst
    witnesses = []
    faithful = True
    full = True
    for a in A.objects:
        for b in A.objects:
            seen = {}
            image = set()
            for m in A.hom(a, b):
                fm = F.mor_map[m]
                if fm in seen:
                    faithful = False
                    witnesses.append(
                        f"faithfulness fails: morphisms {seen[fm]} and {m} ({a} -> {b}) "
                        f"both map to {fm}")
                else:
                    seen[fm] = m
                image.add(fm)
            for m2 in B.hom(F.obj_map[a], F.obj_map[b]):
                if m2 not in image:
                    full = False
                    witnesses.append(
                        f"fullness fails: morphism {m2} : F{a} -> F{b} is not hit")
    ess = True
    hit = set(F.obj_map)
    for b in B.objects:
        if b in hit:
            continue
        if not any(B.invertible_hom(F.obj_map[a], b) for a in A.objects):
            ess = False
            witnesses.append(f"essential surjectivity fails: object {b} is not reached up to iso")
    return EquivalenceReport(F, faithful, full, ess, tuple(witnesses))
