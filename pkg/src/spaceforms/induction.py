"""Induced characters, Frobenius reciprocity, induction tables, and
explicit induced representation matrices.

Induced decompositions are always computed twice: once through
Frobenius reciprocity (subduction inner products on the subgroup) and
once through the induced-character formula on the big group.  The two
routes must agree exactly; each validates the other and the class
transport maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import (ClassFunction, character_table,
                         cyclic_character, inner_product, inner_product_int,
                         regular_character, restrict)
from .exactnum import CycloNum, ONE, ZERO
from .groups import (ContractViolation, CosetDecomposition, FiniteGroup,
                     SubgroupHandle, left_cosets)


def _coerce_subgroup_character(H: SubgroupHandle, chi) -> ClassFunction:
    if isinstance(chi, int):
        return cyclic_character(H, chi)
    if isinstance(chi, ClassFunction):
        if chi.group is not H.group:
            raise ValueError("character does not live on this subgroup")
        return chi
    raise TypeError(f"cannot interpret {chi!r} as a character of {H.name}")


def induce_character(H: SubgroupHandle, chi) -> ClassFunction:
    """(Ind chi)(g) = (1/|H|) sum_{x in G} chi_dot(x^-1 g x) with
    chi_dot extended by zero off H."""
    G = H.parent
    chi = _coerce_subgroup_character(H, chi)
    sub = H.group
    dot = {p: chi.value_on_element(pos) for pos, p in enumerate(sub.to_parent)}
    t, inv = G.mult, G.inv
    vals = []
    for rep in G.class_reps:
        acc = ZERO
        for x in range(len(G)):
            y = t[t[inv[x]][rep]][x]
            v = dot.get(y)
            if v is not None:
                acc = acc + v
        vals.append(acc / H.order)
    return ClassFunction(G, vals)


def frobenius_multiplicity(A, H: SubgroupHandle, chi) -> int:
    """n(A, Ind chi), computed on both sides of the reciprocity identity
    <A, Ind chi>_G = <Sub A, chi>_H; the two must agree exactly."""
    G = H.parent
    table = character_table(G)
    irrep = table[A] if isinstance(A, str) else A
    chi = _coerce_subgroup_character(H, chi)
    big = inner_product_int(irrep.char, induce_character(H, chi))
    small = inner_product_int(restrict(irrep.char, H), chi)
    if big != small:
        raise ContractViolation(
            f"reciprocity mismatch for {irrep.name}: "
            f"Ind side {big} != Sub side {small}")
    return big


@dataclass(frozen=True)
class InducedDecomposition:
    """Decomposition of Ind(omega^r) from a cyclic subgroup."""
    group_name: str
    generator: str
    twist: int
    subgroup_order: int
    constituents: tuple   # ((IrrepLabel, multiplicity), ...) in table order

    @property
    def induced_dimension(self) -> int:
        return sum(label.dimension * m for label, m in self.constituents)

    def as_dict(self) -> dict:
        return {label.name: m for label, m in self.constituents}

    def render(self) -> str:
        parts = []
        for label, m in self.constituents:
            parts.append(label.name if m == 1 else f"{m}x{label.name}")
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return f"{self.twist}^({self.generator}) = {self.render()}"


def induce_twist(G: FiniteGroup, gen: str, r: int) -> InducedDecomposition:
    """Decompose Ind(omega^r) from the cyclic subgroup <gen> of G, via
    reciprocity cross-checked against the induced-character formula."""
    H = G.cyclic_subgroup(gen)
    q = H.order
    r %= q
    table = character_table(G)
    chi = cyclic_character(H, r)
    induced = induce_character(H, chi)
    via_formula = {ir.name: inner_product_int(ir.char, induced) for ir in table}
    via_reciprocity = {ir.name: inner_product_int(restrict(ir.char, H), chi)
                       for ir in table}
    if via_formula != via_reciprocity:
        raise ContractViolation(
            f"induced-character formula and reciprocity disagree for "
            f"{r}^({gen}) on {G.name}")
    consts = tuple((ir.label, via_formula[ir.name]) for ir in table
                   if via_formula[ir.name])
    dec = InducedDecomposition(G.name, gen, r, q, consts)
    if dec.induced_dimension * q != len(G):
        raise ContractViolation(
            f"dimension bookkeeping fails for {r}^({gen}): "
            f"{dec.induced_dimension} * {q} != {len(G)}")
    return dec


def induction_table(G: FiniteGroup, gen: str) -> list[InducedDecomposition]:
    """All rows r = 0..q-1 for the cyclic subgroup <gen>.

    Twist indices are kept un-collapsed; use `reflection_identities` to
    see which rows coincide.  (r and q-r always coincide when gen is
    conjugate to its inverse; in the tetrahedral group the T and S rows
    pair across the two subgroups instead.)"""
    H = G.cyclic_subgroup(gen)
    return [induce_twist(G, gen, r) for r in range(H.order)]


def reflection_identities(G: FiniteGroup, gen: str):
    """(r, q-r, coincide?) for every twist; records where the column
    entries start repeating."""
    rows = induction_table(G, gen)
    q = len(rows)
    return [(r, (q - r) % q,
             rows[r].constituents == rows[(q - r) % q].constituents)
            for r in range(q)]


def independent_rows(rows: list[InducedDecomposition]) -> list[int]:
    """Indices of first occurrences, mirroring tables that cease when
    repetitions begin."""
    seen = {}
    out = []
    for r, row in enumerate(rows):
        if row.constituents not in seen:
            seen[row.constituents] = r
            out.append(r)
    return out


def render_all_columns(G: FiniteGroup, gens=("T", "S", "R")) -> str:
    """Aligned text table: one row per twist r, one column per cyclic
    generator, entries ceasing once a column starts repeating."""
    columns = {gen: induction_table(G, gen) for gen in gens}
    keep = {gen: set(independent_rows(rows)) for gen, rows in columns.items()}
    height = max(max(keep[gen]) for gen in gens) + 1
    grid = [["r^"] + list(gens)]
    for r in range(height):
        row = [str(r)]
        for gen in gens:
            if r < len(columns[gen]) and r in keep[gen]:
                row.append(columns[gen][r].render())
            else:
                row.append("-")
        grid.append(row)
    widths = [max(len(line[c]) for line in grid) for c in range(len(grid[0]))]
    return "\n".join("   ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
                     for line in grid)


def column_sum_is_regular(G: FiniteGroup, gen: str) -> bool:
    """Adding the complete column of inductions gives the regular rep."""
    H = G.cyclic_subgroup(gen)
    total = ClassFunction(G, (ZERO,) * G.num_classes)
    for r in range(H.order):
        total = total + induce_character(H, cyclic_character(H, r))
    return total == regular_character(G)


def nested_handle(K: SubgroupHandle, H: SubgroupHandle) -> SubgroupHandle:
    """Re-express H <= G as a subgroup of K.group, given H <= K <= G."""
    if K.parent is not H.parent:
        raise ValueError("subgroups live in different parents")
    kset = set(K.member_indices)
    if not set(H.member_indices) <= kset:
        raise ValueError("H is not contained in K")
    sub = K.group
    inner_members = [sub.from_parent[p] for p in H.member_indices]
    inner_gen = (sub.from_parent[H.generator_index]
                 if H.generator_index is not None else None)
    return SubgroupHandle(sub, inner_members, generator_index=inner_gen,
                          name=f"{H.name}<in>{K.name}")


def induce_in_stages(G: FiniteGroup, K: SubgroupHandle, H: SubgroupHandle,
                     chi) -> dict:
    """Check Ind_{H->G} chi = Ind_{K->G}(Ind_{H->K} chi) exactly."""
    if K.parent is not G or H.parent is not G:
        raise ValueError("subgroup chain must live in G")
    chi = _coerce_subgroup_character(H, chi)
    direct = induce_character(H, chi)
    inner = nested_handle(K, H)
    base, rebased = H.group, inner.group
    chi_inner = ClassFunction(
        rebased,
        (chi.value_on_element(base.index[rebased.elements[rep]])
         for rep in rebased.class_reps))
    middle = induce_character(inner, chi_inner)
    staged = induce_character(K, middle)
    return {
        "direct": direct,
        "middle": middle,
        "staged": staged,
        "equal": direct == staged,
    }


class MonomialRep:
    """Explicit induced representation in the coset-block basis.

    For a degree-d inducing rep B of H with chosen left-coset
    representatives g_i, the block (j, i) of D(g) is nonzero only when
    g_j^-1 g g_i lands in H, where it equals B(g_j^-1 g g_i).  For
    one-dimensional B every row and column carries exactly one nonzero
    entry, a root of unity.
    """

    def __init__(self, G: FiniteGroup, H: SubgroupHandle, block_matrices,
                 block_dim: int, cosets: CosetDecomposition | None = None):
        self.group = G
        self.subgroup = H
        self.block_dim = block_dim
        self.blocks = block_matrices     # parent h index -> d x d CycloNum rows
        self.cosets = cosets or left_cosets(G, H)
        self._verify_inducing_homomorphism()
        n = self.cosets.count
        self.degree = n * block_dim
        t, inv = G.mult, G.inv
        reps = self.cosets.representatives
        data = []
        for g in range(len(G)):
            target = [None] * n
            hvals = [None] * n
            for i, gi in enumerate(reps):
                e = t[g][gi]
                j, h = self.cosets.coset_of[e]
                target[i] = j
                hvals[i] = h
            if sorted(target) != list(range(n)):
                raise ContractViolation("coset action is not a permutation")
            data.append((tuple(target), tuple(hvals)))
        self.data = tuple(data)

    def _verify_inducing_homomorphism(self):
        par = self.subgroup.parent
        for a in self.subgroup.member_indices:
            for b in self.subgroup.member_indices:
                ab = par.mult[a][b]
                if _mat_mul(self.blocks[a], self.blocks[b]) != self.blocks[ab]:
                    raise ValueError("inducing map is not a homomorphism on H")
        if self.blocks[par.identity_index] != _identity_matrix(self.block_dim):
            raise ValueError("inducing map does not send E to the identity")

    @staticmethod
    def from_cyclic_twist(G: FiniteGroup, gen: str, r: int) -> "MonomialRep":
        H = G.cyclic_subgroup(gen)
        sub = H.group
        q = len(sub)
        blocks = {}
        for pos in range(q):
            p = sub.to_parent[pos]
            blocks[p] = ((cyclic_character(H, r).value_on_class(pos),),)
        return MonomialRep(G, H, blocks, 1)

    @staticmethod
    def from_trivial(G: FiniteGroup, H: SubgroupHandle) -> "MonomialRep":
        blocks = {p: ((ONE,),) for p in H.member_indices}
        return MonomialRep(G, H, blocks, 1)

    def compose(self, g1: int, g2: int):
        """The (perm, h) data of D(g1) D(g2) by the block product rule."""
        t = self.group.mult
        p1, h1 = self.data[g1]
        p2, h2 = self.data[g2]
        perm = tuple(p1[p2[i]] for i in range(len(p2)))
        hs = tuple(t[h1[p2[i]]][h2[i]] for i in range(len(p2)))
        return perm, hs

    def is_homomorphic_at(self, g1: int, g2: int) -> bool:
        """D(g1) D(g2) == D(g1 g2), compared through the unique coset
        factorization (hence exact)."""
        return self.compose(g1, g2) == self.data[self.group.mult[g1][g2]]

    def matrix(self, g: int):
        """Materialize D(g) as a dense degree x degree CycloNum matrix."""
        n = self.cosets.count
        d = self.block_dim
        out = [[ZERO] * (n * d) for _ in range(n * d)]
        perm, hs = self.data[g]
        for i in range(n):
            j = perm[i]
            block = self.blocks[hs[i]]
            for a in range(d):
                for b in range(d):
                    out[j * d + a][i * d + b] = block[a][b]
        return out

    def character(self) -> ClassFunction:
        vals = []
        for rep in self.group.class_reps:
            perm, hs = self.data[rep]
            acc = ZERO
            for i, j in enumerate(perm):
                if i == j:
                    block = self.blocks[hs[i]]
                    for a in range(self.block_dim):
                        acc = acc + block[a][a]
            vals.append(acc)
        return ClassFunction(self.group, vals)


def _identity_matrix(d: int):
    return tuple(tuple(ONE if a == b else ZERO for b in range(d))
                 for a in range(d))


def _mat_mul(A, B):
    d = len(A)
    return tuple(tuple(sum((A[a][k] * B[k][b] for k in range(d)), ZERO)
                       for b in range(d)) for a in range(d))


def verify_monomial_rep(G: FiniteGroup, gen: str, r: int,
                        exhaustive: bool | None = None,
                        random_pairs: int = 1000) -> bool:
    """Homomorphism property of the induced matrices (exhaustively on
    all |G|^2 products for small groups, generator pairs plus seeded
    random products otherwise) and exactness of the trace against the
    induced character on every class."""
    import random as _random
    H = G.cyclic_subgroup(gen)
    rep = induced_matrices(G, gen, r)
    if rep.character() != induce_character(H, r):
        return False
    size = len(G)
    if exhaustive is None:
        exhaustive = size <= 24
    if exhaustive:
        pairs = ((a, b) for a in range(size) for b in range(size))
    else:
        rng = _random.Random(9000 + size + r)
        gens = sorted(set(G.generators.values()))
        pairs = ([(a, b) for a in gens for b in gens]
                 + [(rng.randrange(size), rng.randrange(size))
                    for _ in range(random_pairs)])
    return all(rep.is_homomorphic_at(a, b) for a, b in pairs)


def induced_matrices(G: FiniteGroup, gen_or_handle, B) -> MonomialRep:
    """Explicit induced matrices for an inducing rep of a subgroup.

    `B` may be a cyclic twist index (for a cyclic subgroup named by its
    generator) or a mapping from parent element indices of H to d x d
    CycloNum matrices."""
    if isinstance(gen_or_handle, str):
        H = G.cyclic_subgroup(gen_or_handle)
        if isinstance(B, int):
            return MonomialRep.from_cyclic_twist(G, gen_or_handle, B)
    else:
        H = gen_or_handle
        if isinstance(B, int):
            sub = H.group
            q = len(sub)
            chi = cyclic_character(H, B)
            blocks = {sub.to_parent[pos]: ((chi.value_on_class(pos),),)
                      for pos in range(q)}
            return MonomialRep(G, H, blocks, 1)
    blocks = {p: tuple(tuple(row) for row in mat) for p, mat in B.items()}
    d = len(next(iter(blocks.values())))
    return MonomialRep(G, H, blocks, d)
