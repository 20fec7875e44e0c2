"""Binary polyhedral groups as exact unit quaternions.

The groups <l,m,n>: R^l = S^m = T^n = RST for (l,m,n) = (2,3,3), (2,3,4),
(2,3,5) are enumerated by closure from explicit quaternion generators
whose coordinates live in Q(zeta_120).  Everything downstream (classes,
characters, inductions, spectra) works from the integer multiplication
table built here, so group construction also validates the presentation
relations exactly before returning.

The generator constants below are not taken on trust: any triple passing
the relation checks is acceptable, and `generator_triple(..., variant=1)`
provides a second valid triple per group so invariance of downstream
results under the choice can be tested.
"""

from __future__ import annotations

import json

from .exactnum import CONDUCTOR, CycloNum, ONE, ZERO, root_of_unity


class GroupConstructionError(Exception):
    """Raised when generator constants fail the presentation relations."""


class ContractViolation(Exception):
    """An internal exact identity that must hold failed; indicates a bug."""


class Quat:
    """Quaternion with CycloNum coordinates in the basis 1, i, j, k."""

    __slots__ = ("w", "x", "y", "z", "_hash")

    def __init__(self, w, x, y, z):
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Quat is immutable")

    def __mul__(self, o: "Quat") -> "Quat":
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = o.w, o.x, o.y, o.z
        return Quat(
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        )

    def __neg__(self):
        return Quat(-self.w, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quat":
        return Quat(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> CycloNum:
        return (self.w * self.w + self.x * self.x
                + self.y * self.y + self.z * self.z)

    def is_unit(self) -> bool:
        return self.norm() == ONE

    def trace(self) -> CycloNum:
        """Trace of the corresponding SU(2) matrix, i.e. 2w."""
        return self.w * 2

    def __eq__(self, o):
        if not isinstance(o, Quat):
            return NotImplemented
        return (self.w == o.w and self.x == o.x
                and self.y == o.y and self.z == o.z)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.w, self.x, self.y, self.z))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Quat({self.w}, {self.x}, {self.y}, {self.z})"


QUAT_ONE = Quat(ONE, ZERO, ZERO, ZERO)


def _cos_sin(q: int) -> tuple[CycloNum, CycloNum]:
    """Exact cos(2*pi/q), sin(2*pi/q) for q dividing the conductor."""
    z = root_of_unity(q, 1)
    zb = root_of_unity(q, -1)
    c = (z + zb) / 2
    s = (z - zb) / (root_of_unity(4, 1) * 2)
    return c, s


def _half(*coords) -> Quat:
    return Quat(*(c / 2 for c in coords))


def generator_triple(n: int, variant: int = 0) -> tuple[Quat, Quat, Quat]:
    """A quaternion triple (R, S, T) satisfying R^2 = S^3 = T^n = RST.

    variant 1 gives a second valid triple with different axes, used to
    check that downstream results do not depend on the choice.
    """
    if n == 3:
        if variant == 0:
            s = _half(ONE, ONE, ONE, -ONE)
            t = _half(ONE, ONE, ONE, ONE)
        else:
            s = _half(ONE, ONE, ONE, ONE)
            t = _half(ONE, ONE, -ONE, ONE)
        return s * t, s, t
    if n == 4:
        r2 = root_of_unity(8, 1) + root_of_unity(8, -1)   # sqrt(2)
        s = _half(ONE, ONE, ONE, ONE)
        if variant == 0:
            t = Quat(ONE / r2, ONE / r2, ZERO, ZERO)
        else:
            t = Quat(ONE / r2, ZERO, ONE / r2, ZERO)
        return s * t, s, t
    if n == 5:
        tau = root_of_unity(10, 1) + root_of_unity(10, -1)  # golden ratio
        tinv = tau - 1
        t = _half(tau, ONE, tinv, ZERO)
        s = _half(ONE, ONE, ONE, ONE) if variant == 0 else _half(ONE, ONE, ONE, -ONE)
        return s * t, s, t
    raise ValueError(f"no binary polyhedral group <2,3,{n}>")


def _closure(gens: list[Quat]):
    """BFS closure from the identity; returns elements in discovery
    order, the index map, and left-multiplication rows for every
    element (composed along the BFS tree, so only O(|gens|*|G|)
    quaternion products are needed)."""
    elements = [QUAT_ONE]
    index = {QUAT_ONE: 0}
    frontier = [QUAT_ONE]
    parent: list[tuple[int, int] | None] = [None]   # (gen id, source idx)
    while frontier:
        new = []
        for gi, g in enumerate(gens):
            for x in frontier:
                p = g * x
                if p not in index:
                    index[p] = len(elements)
                    elements.append(p)
                    parent.append((gi, index[x]))
                    new.append(p)
        frontier = new
        if len(elements) > 10000:
            raise GroupConstructionError("closure did not terminate")
    size = len(elements)
    gen_perm = [[index[g * x] for x in elements] for g in gens]
    left = [list(range(size))] + [None] * (size - 1)
    for idx in range(1, size):
        gi, src = parent[idx]
        pg, ps = gen_perm[gi], left[src]
        left[idx] = [pg[ps[j]] for j in range(size)]
    return elements, index, left


class SubgroupHandle:
    """A subgroup given by its member indices inside a parent group."""

    def __init__(self, parent: "FiniteGroup", member_indices, generator_index=None,
                 name: str | None = None):
        members = tuple(sorted(member_indices))
        mset = set(members)
        t = parent.mult
        for a in members:
            if parent.inv[a] not in mset:
                raise ValueError("subgroup not closed under inverse")
            for b in members:
                if t[a][b] not in mset:
                    raise ValueError("subgroup not closed under product")
        if parent.identity_index not in mset:
            raise ValueError("subgroup does not contain the identity")
        self.parent = parent
        self.member_indices = members
        self.generator_index = generator_index
        self.order = len(members)
        self.name = name or f"H{len(members)}"
        self._group = None

    @property
    def group(self) -> "FiniteGroup":
        """The subgroup as a standalone FiniteGroup; its elements keep a
        map back to parent indices via `to_parent`."""
        if self._group is None:
            par = self.parent
            if self.generator_index is not None:
                order_list = [par.identity_index]
                cur = self.generator_index
                while cur != par.identity_index:
                    order_list.append(cur)
                    cur = par.mult[cur][self.generator_index]
                if len(order_list) != self.order:
                    raise ContractViolation("generator does not span the subgroup")
                self._group = FiniteGroup._from_parent(par, order_list, self.name,
                                                       cyclic=True)
            else:
                self._group = FiniteGroup._from_parent(
                    par, list(self.member_indices), self.name)
        return self._group

    def __repr__(self):
        return f"SubgroupHandle({self.name}, order={self.order})"


class CosetDecomposition:
    """Left cosets g_i H with the unique factorization g = g_i * h."""

    def __init__(self, group: "FiniteGroup", subgroup: SubgroupHandle):
        t = group.mult
        members = subgroup.member_indices
        reps = []
        coset_of = [None] * len(group)
        for g in range(len(group)):
            if coset_of[g] is not None:
                continue
            ri = len(reps)
            reps.append(g)
            for h in members:
                e = t[g][h]
                if coset_of[e] is not None:
                    raise ContractViolation("cosets overlap")
                coset_of[e] = (ri, h)
        if len(reps) * subgroup.order != len(group):
            raise ContractViolation("coset count mismatch")
        self.group = group
        self.subgroup = subgroup
        self.representatives = tuple(reps)
        self.coset_of = tuple(coset_of)

    @property
    def count(self) -> int:
        return len(self.representatives)


class FiniteGroup:
    """An enumerated finite subgroup of SU(2).

    Carries the multiplication table, inverses, conjugacy classes with
    canonical labels, and the distinguished generators.  Treated as
    immutable once built; derived data (character table, spin
    characters, subgroups) is cached on the instance.
    """

    @staticmethod
    def _make(name, elements, mult, generators, presentation=None,
              to_parent=None, from_parent=None) -> "FiniteGroup":
        g = FiniteGroup.__new__(FiniteGroup)
        g.name = name
        g.elements = tuple(elements)
        g.index = {e: i for i, e in enumerate(g.elements)}
        g.mult = tuple(tuple(row) for row in mult)
        g.generators = dict(generators)
        g.presentation = presentation
        g.to_parent = to_parent
        g.from_parent = from_parent
        if g.index[QUAT_ONE] != 0:
            raise ContractViolation("identity must be element 0")
        g.identity_index = 0
        g.neg_identity_index = g.index.get(-QUAT_ONE)
        g.inv = tuple(g.index[e.conjugate()] for e in g.elements)
        g.orders = g._element_orders()
        g._conjugacy()
        g._char_table = None
        g._spin_chars = {}
        g._cyclic_subgroups = {}
        return g

    @staticmethod
    def from_generators(name, gens: dict[str, Quat], presentation=None):
        for label, gen in gens.items():
            if not gen.is_unit():
                raise GroupConstructionError(
                    f"generator {label} is not a unit quaternion")
        glist = list(gens.values())
        elements, index, left = _closure(glist)
        return FiniteGroup._make(name, elements, left,
                                 {k: index[v] for k, v in gens.items()},
                                 presentation=presentation)

    @staticmethod
    def _from_parent(parent: "FiniteGroup", parent_indices: list[int], name,
                     cyclic: bool = False):
        if parent.identity_index != parent_indices[0]:
            raise ContractViolation("subgroup ordering must start at identity")
        pos = {p: i for i, p in enumerate(parent_indices)}
        mult = [
            [pos[parent.mult[a][b]] for b in parent_indices]
            for a in parent_indices
        ]
        gens = {"g": 1} if cyclic and len(parent_indices) > 1 else {}
        return FiniteGroup._make(name,
                                 [parent.elements[p] for p in parent_indices],
                                 mult, gens,
                                 to_parent=tuple(parent_indices),
                                 from_parent=pos)

    # -- basic structure ----------------------------------------------

    def __len__(self):
        return len(self.elements)

    def power(self, idx: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv[idx], -k)
        out = self.identity_index
        for _ in range(k):
            out = self.mult[out][idx]
        return out

    def _element_orders(self):
        orders = []
        for i in range(len(self.elements)):
            n, cur = 1, i
            while cur != self.identity_index:
                cur = self.mult[cur][i]
                n += 1
            orders.append(n)
        return tuple(orders)

    def conjugate_element(self, g: int, x: int) -> int:
        return self.mult[self.mult[g][x]][self.inv[g]]

    def _conjugacy(self):
        n = len(self.elements)
        t, inv = self.mult, self.inv
        class_of_raw = [-1] * n
        raw_classes = []
        for x in range(n):
            if class_of_raw[x] >= 0:
                continue
            cid = len(raw_classes)
            orbit = sorted({t[t[g][x]][inv[g]] for g in range(n)})
            for e in orbit:
                class_of_raw[e] = cid
            raw_classes.append(tuple(orbit))

        # canonical ordering: [E], [-E], then generator-power labels
        order: list[int] = []
        labels: dict[int, str] = {}
        reps: dict[int, int] = {}
        aliases: dict[str, str] = {}

        def claim(cid, label, rep):
            if cid in labels:
                if labels[cid] != label:
                    aliases[label] = labels[cid]
            else:
                labels[cid] = label
                reps[cid] = rep
                order.append(cid)

        gen_names = [g for g in ("R", "S", "T") if g in self.generators]
        if not gen_names and "g" in self.generators:
            # cyclic group: classes in power order so class index = exponent
            gi = self.generators["g"]
            cur = self.identity_index
            for j in range(self.orders[gi]):
                if cur == self.identity_index:
                    label = "E"
                elif cur == self.neg_identity_index:
                    label = "-E"
                else:
                    label = "g" if j == 1 else f"g^{j}"
                claim(class_of_raw[cur], label, cur)
                cur = self.mult[cur][gi]
            gen_names = []
        else:
            claim(class_of_raw[self.identity_index], "E", self.identity_index)
            if self.neg_identity_index is not None:
                claim(class_of_raw[self.neg_identity_index], "-E",
                      self.neg_identity_index)
        # primary labels [gen^j] run to j = l-1 / m-1 / n-1 when the
        # presentation is known; higher powers only record aliases
        jmax = {}
        if self.presentation and len(gen_names) == 3:
            pl, pm, pn = self.presentation
            jmax = {"R": pl - 1, "S": pm - 1, "T": pn - 1}
        for aliases_only in (False, True):
            for gname in gen_names:
                gi = self.generators[gname]
                q = self.orders[gi]
                cur = gi
                for j in range(1, q):
                    central = cur in (self.identity_index, self.neg_identity_index)
                    primary_range = j <= jmax.get(gname, q - 1)
                    if not central and (aliases_only or primary_range):
                        label = gname if j == 1 else f"{gname}^{j}"
                        claim(class_of_raw[cur], label, cur)
                    cur = self.mult[cur][gi]
        for cid in range(len(raw_classes)):
            if cid not in labels:
                e = raw_classes[cid][0]
                claim(cid, f"c{self.orders[e]}_{e}", e)

        remap = {cid: pos for pos, cid in enumerate(order)}
        self.classes = tuple(raw_classes[cid] for cid in order)
        self.class_of = tuple(remap[class_of_raw[x]] for x in range(n))
        self.class_labels = tuple(labels[cid] for cid in order)
        self.class_reps = tuple(reps[cid] for cid in order)
        self.class_sizes = tuple(len(c) for c in self.classes)
        self.class_aliases = aliases
        self.class_by_label = {lab: i for i, lab in enumerate(self.class_labels)}
        for alias, primary in aliases.items():
            self.class_by_label.setdefault(alias, self.class_by_label[primary])

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    # -- subgroups ----------------------------------------------------

    def cyclic_subgroup(self, gen: str) -> SubgroupHandle:
        if gen in self._cyclic_subgroups:
            return self._cyclic_subgroups[gen]
        if gen not in self.generators:
            raise ValueError(f"group {self.name} has no generator named {gen!r}")
        gi = self.generators[gen]
        members = []
        cur = self.identity_index
        while True:
            members.append(cur)
            cur = self.mult[cur][gi]
            if cur == self.identity_index:
                break
        handle = SubgroupHandle(self, members, generator_index=gi,
                                name=f"{self.name}.<{gen}>")
        self._cyclic_subgroups[gen] = handle
        return handle

    def subgroup(self, member_indices, name=None) -> SubgroupHandle:
        return SubgroupHandle(self, member_indices, name=name)

    def commutator_subgroup(self) -> SubgroupHandle:
        t, inv = self.mult, self.inv
        n = len(self.elements)
        comms = {t[t[t[a][b]][inv[a]]][inv[b]] for a in range(n) for b in range(n)}
        members = _subgroup_closure(self, comms)
        return SubgroupHandle(self, members, name=f"{self.name}.derived")

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={len(self)})"


def _subgroup_closure(G: FiniteGroup, seed) -> list[int]:
    members = {G.identity_index} | set(seed)
    frontier = list(members)
    while frontier:
        new = []
        for a in frontier:
            for b in list(members):
                for p in (G.mult[a][b], G.mult[b][a]):
                    if p not in members:
                        members.add(p)
                        new.append(p)
        frontier = new
    return sorted(members)


_BUILD_CACHE: dict[tuple, FiniteGroup] = {}

GROUP_NAMES = {3: "2T", 4: "2O", 5: "2I"}


def build_binary_polyhedral(l: int = 2, m: int = 3, n: int = 3,
                            variant: int = 0) -> FiniteGroup:
    """Enumerate <l,m,n> from quaternion generators and verify the
    presentation relations exactly."""
    if (l, m, n) not in ((2, 3, 3), (2, 3, 4), (2, 3, 5)):
        raise ValueError(f"unsupported presentation <{l},{m},{n}>")
    key = (l, m, n, variant)
    if key in _BUILD_CACHE:
        return _BUILD_CACHE[key]
    R, S, T = generator_triple(n, variant)
    nege = -QUAT_ONE

    def qpow(q, k):
        out = QUAT_ONE
        for _ in range(k):
            out = out * q
        return out

    rst = R * S * T
    for label, val in (("R^l", qpow(R, l)), ("S^m", qpow(S, m)),
                       ("T^n", qpow(T, n))):
        if val != rst:
            raise GroupConstructionError(
                f"relation {label} = RST fails for <{l},{m},{n}>")
    if rst != nege or rst * rst != QUAT_ONE:
        raise GroupConstructionError("(RST)^2 = E fails")

    name = GROUP_NAMES[n] + ("" if variant == 0 else f"#{variant}")
    G = FiniteGroup.from_generators(name, {"R": R, "S": S, "T": T},
                                    presentation=(l, m, n))
    G.generators["RST"] = G.index[rst]
    expected_order = {3: 24, 4: 48, 5: 120}[n]
    if len(G) != expected_order:
        raise GroupConstructionError(
            f"closure of <{l},{m},{n}> has order {len(G)}, "
            f"expected {expected_order}")
    for gname, gorder in (("R", 2 * l), ("S", 2 * m), ("T", 2 * n)):
        if G.orders[G.generators[gname]] != gorder:
            raise GroupConstructionError(f"generator {gname} has wrong order")
    for i, e in enumerate(G.elements):
        if not e.is_unit():
            raise GroupConstructionError("non-unit element in closure")
        if CONDUCTOR % G.orders[i] != 0:
            raise GroupConstructionError(
                "element order does not divide the conductor")
    _BUILD_CACHE[key] = G
    return G


def binary_polyhedral(name: str) -> FiniteGroup:
    """Build by conventional name 2T / 2O / 2I (aliases T'/O'/Y')."""
    canon = {"2T": 3, "T'": 3, "2O": 4, "O'": 4, "2I": 5, "Y'": 5}
    if name not in canon:
        raise ValueError(f"unknown group name {name!r}")
    return build_binary_polyhedral(2, 3, canon[name])


def cyclic_group(q: int) -> FiniteGroup:
    """Z_q embedded in SU(2) as rotations about the i axis; q | 120."""
    if q <= 0 or CONDUCTOR % q != 0:
        raise ValueError(f"cyclic order {q} must divide {CONDUCTOR}")
    key = ("Zq", q)
    if key in _BUILD_CACHE:
        return _BUILD_CACHE[key]
    if q == 1:
        G = FiniteGroup.from_generators("Z1", {})
    else:
        c, s = _cos_sin(q)
        g = Quat(c, s, ZERO, ZERO)
        G = FiniteGroup.from_generators(f"Z{q}", {"g": g})
        if len(G) != q or G.orders[G.generators["g"]] != q:
            raise GroupConstructionError(f"cyclic generator has wrong order for Z{q}")
    _BUILD_CACHE[key] = G
    return G


def conjugacy_classes(G: FiniteGroup):
    """The canonical class partition as (label, size, representative)."""
    return list(zip(G.class_labels, G.class_sizes, G.class_reps))


def left_cosets(G: FiniteGroup, H: SubgroupHandle) -> CosetDecomposition:
    if H.parent is not G:
        raise ValueError("subgroup does not belong to this group")
    return CosetDecomposition(G, H)


def find_index2_subgroup(G: FiniteGroup) -> SubgroupHandle:
    """The kernel of the unique surjection onto the 2-element group,
    when it exists (among the three groups, only 2O has one)."""
    derived = G.commutator_subgroup()
    if 2 * derived.order != len(G):
        raise LookupError(f"{G.name} has no index-2 subgroup "
                          f"(abelianization has order {len(G) // derived.order})")
    return derived


def find_presentation_triple(G: FiniteGroup, l: int, m: int, n: int):
    """Search G for element indices (R, S, T) with R^l = S^m = T^n = RST
    and <S,T> = G.  Used to give canonical generators to subgroups that
    arrive without them."""
    if G.neg_identity_index is None:
        raise LookupError("group has no central -E")
    neg = G.neg_identity_index
    cand_s = [i for i in range(len(G)) if G.orders[i] == 2 * m
              and G.power(i, m) == neg]
    cand_t = [i for i in range(len(G)) if G.orders[i] == 2 * n
              and G.power(i, n) == neg]
    for s in cand_s:
        for t in cand_t:
            r = G.mult[s][t]
            if G.power(r, l) != neg:
                continue
            if len(_subgroup_closure(G, {s, t})) == len(G):
                return r, s, t
    raise LookupError(f"no presentation triple <{l},{m},{n}> found in {G.name}")


def adopt_presentation_triple(G: FiniteGroup, l: int, m: int, n: int) -> None:
    """Install searched generators R, S, T on a group that lacks them."""
    r, s, t = find_presentation_triple(G, l, m, n)
    G.generators.update({"R": r, "S": s, "T": t,
                         "RST": G.mult[G.mult[r][s]][t]})
    G.presentation = (l, m, n)
    G._conjugacy()   # relabel classes with the new generators
    G._char_table = None


def verify_generator_conjugations(G: FiniteGroup) -> list[tuple[str, bool, str]]:
    """Conjugation identities tying the S and T cyclic subgroups together.

    For <2,3,3>: with U = T^-1 R T one has U^-1 T U = S^-1 and the class
    fusions [S] = [T^-1], [S^2] = [T^-2].  For <2,3,4> and <2,3,5>:
    U = S R S^-1 inverts T, and no S-power class meets a T-power class
    away from the center.
    """
    checks = []
    t, inv = G.mult, G.inv
    R, S, T = (G.generators[k] for k in ("R", "S", "T"))
    n = G.presentation[2]
    if n == 3:
        U = t[t[inv[T]][R]][T]
        lhs = t[t[inv[U]][T]][U]
        checks.append(("U^-1 T U = S^-1 with U = T^-1 R T",
                       lhs == inv[S], f"got element {lhs}"))
        checks.append(("[S] = [T^-1]",
                       G.class_of[S] == G.class_of[inv[T]], ""))
        checks.append(("[S^2] = [T^-2]",
                       G.class_of[t[S][S]] == G.class_of[inv[t[T][T]]], ""))
    else:
        U = t[t[S][R]][inv[S]]
        lhs = t[t[inv[U]][inv[T]]][U]
        checks.append(("U^-1 T^-1 U = T with U = S R S^-1",
                       lhs == T, f"got element {lhs}"))
        s_classes = {G.class_of[G.power(S, j)] for j in range(1, G.orders[S])}
        t_classes = {G.class_of[G.power(T, j)] for j in range(1, G.orders[T])}
        central = {G.class_of[G.identity_index], G.class_of[G.neg_identity_index]}
        overlap = (s_classes & t_classes) - central
        checks.append(("no S/T class fusion", not overlap,
                       f"fused classes: {sorted(overlap)}"))
    return checks


# -- serialization ----------------------------------------------------

SCHEMA = "spaceforms/1"


def _cyclo_to_json(c: CycloNum):
    return {"num": list(c.num), "den": c.den}


def _cyclo_from_json(d) -> CycloNum:
    return CycloNum(tuple(d["num"]), d["den"])


def group_to_json(G: FiniteGroup) -> dict:
    """JSON document with elements as coefficient vectors, the
    multiplication table and the class partition (cache format)."""
    return {
        "schema": SCHEMA,
        "kind": "group",
        "name": G.name,
        "presentation": list(G.presentation) if G.presentation else None,
        "elements": [[_cyclo_to_json(c) for c in (e.w, e.x, e.y, e.z)]
                     for e in G.elements],
        "mult_table": [list(row) for row in G.mult],
        "generators": dict(G.generators),
        "classes": [list(c) for c in G.classes],
        "class_labels": list(G.class_labels),
    }


def group_from_json(doc: dict) -> FiniteGroup:
    if doc.get("schema") != SCHEMA or doc.get("kind") != "group":
        raise ValueError("not a group document")
    elements = [Quat(*(_cyclo_from_json(c) for c in e)) for e in doc["elements"]]
    pres = doc.get("presentation")
    G = FiniteGroup._make(doc["name"], elements, doc["mult_table"],
                          doc["generators"],
                          presentation=tuple(pres) if pres else None)
    # cheap integrity checks on the cached table
    k = len(elements)
    for probe in range(0, k, max(1, k // 8)):
        if sorted(G.mult[probe]) != list(range(k)):
            raise ValueError("cached multiplication table row is not a permutation")
    return G


def save_group(G: FiniteGroup, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(group_to_json(G), fh)


def load_group(path: str) -> FiniteGroup:
    with open(path) as fh:
        return group_from_json(json.load(fh))
