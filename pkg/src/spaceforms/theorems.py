"""Verification harness for the spectral identities.

Everything here is checked at the level of degeneracy sequences, which
carry every additive spectral quantity: isospectrality of lens twists
against their induced twists, the dimension relation, the central-
subgroup relations, the per-irrep inversion matrices (solved exactly
over Q and compared against the transcribed classical matrices with a
discrepancy taxonomy), Artin sufficiency, and the Sunada-style pairing.

The linear solver, not the transcription, is ground truth: the solved
matrices satisfy the round-trip identity M * A = I exactly, and the
induction tables they come from are themselves triple-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._reference_tables import REFERENCE_SOLUTION_MATRICES
from .characters import character_table
from .groups import ContractViolation, FiniteGroup, SubgroupHandle
from .induction import induce_character, induce_twist
from .spectra import degeneracy_series

GENERATORS = ("R", "S", "T", "RST")


@dataclass
class CheckResult:
    key: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"item": self.key, "status": "pass" if self.passed else "FAIL",
                "detail": self.detail}


# -- exact linear algebra over Q ----------------------------------------


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system: no pivot in column "
                             f"{col} (rank deficiency)")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _rank(rows: list[list[Fraction]]) -> int:
    mat = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [v / pv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _mat_mul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


# -- per-irrep quantities: the linear systems ----------------------------


def sector_irreps(G: FiniteGroup, sector: str):
    table = character_table(G)
    if sector not in ("spinor", "nonspinor"):
        raise ValueError("sector must be 'spinor' or 'nonspinor'")
    want = sector == "spinor"
    return [ir for ir in table if ir.label.spinor == want]


def decomposition_row(G: FiniteGroup, r: int, gen: str, sector: str):
    """Multiplicities of the sector's irreps in Ind(omega^r) from <gen>;
    the complementary sector must not occur (spinor separation)."""
    dec = induce_twist(G, gen, r).as_dict()
    irreps = sector_irreps(G, sector)
    names = {ir.name for ir in irreps}
    stray = set(dec) - names
    if stray:
        raise ContractViolation(
            f"induction {r}^({gen}) mixes spectral sectors: {sorted(stray)}")
    return [Fraction(dec.get(ir.name, 0)) for ir in irreps]


@dataclass
class SolutionMatrix:
    """Exact inverse expressing per-irrep quantities through lens ones."""
    group_name: str
    sector: str
    row_labels: list          # irrep names
    rhs: list                 # (r, generator) pairs
    matrix: list              # rows of Fractions
    decomposition: list       # the solved system A (rows = rhs equations)

    def row(self, name: str):
        return self.matrix[self.row_labels.index(name)]

    def round_trip_is_identity(self) -> bool:
        prod = _mat_mul(self.matrix, self.decomposition)
        n = len(prod)
        return all(prod[i][j] == (1 if i == j else 0)
                   for i in range(n) for j in range(n))

    def to_json(self) -> dict:
        return {
            "schema": "spaceforms/1",
            "kind": "solution_matrix",
            "group": self.group_name,
            "sector": self.sector,
            "rows": list(self.row_labels),
            "columns": [f"{r};{g}" for r, g in self.rhs],
            "matrix": [[str(v) for v in row] for row in self.matrix],
        }


def solve_irrep_quantities(G: FiniteGroup, sector: str,
                           chosen_rhs: list[tuple[int, str]]) -> SolutionMatrix:
    """Invert the decomposition equations S(r;gen) = sum m_A S(A) for
    the chosen lens quantities; exact over Q with a round-trip check."""
    irreps = sector_irreps(G, sector)
    if len(chosen_rhs) != len(irreps):
        raise ValueError(f"need exactly {len(irreps)} equations for "
                         f"{len(irreps)} unknowns")
    A = [decomposition_row(G, r, gen, sector) for r, gen in chosen_rhs]
    M = _invert(A)
    sol = SolutionMatrix(G.name, sector, [ir.name for ir in irreps],
                         list(chosen_rhs), M, A)
    if not sol.round_trip_is_identity():
        raise ContractViolation("round-trip identity M * A != I")
    return sol


def reference_system(G: FiniteGroup, sector: str):
    ref = REFERENCE_SOLUTION_MATRICES[(G.name.split("#")[0], sector)]
    matrix = [[Fraction(v) for v in row] for row in ref["matrix"]]
    return ref["rows"], [tuple(x) for x in ref["rhs"]], matrix


@dataclass
class RowComparison:
    name: str
    status: str               # exact | permuted | scaled | scaled_permuted | other
    partner: str | None = None
    scale: Fraction | None = None


@dataclass
class MatrixComparison:
    solution: SolutionMatrix
    reference_rows: list
    reference_matrix: list
    rows: list = field(default_factory=list)

    @property
    def all_exact(self) -> bool:
        return all(r.status == "exact" for r in self.rows)

    def statuses(self) -> dict:
        return {r.name: r.status for r in self.rows}

    def summary(self) -> str:
        parts = []
        for r in self.rows:
            if r.status == "exact":
                continue
            extra = ""
            if r.partner and r.partner != r.name:
                extra += f" with row {r.partner}"
            if r.scale is not None and r.scale != 1:
                extra += f" scaled by {r.scale}"
            parts.append(f"{r.name}: {r.status}{extra}")
        return "; ".join(parts) if parts else "exact match"


def _family(name: str) -> str:
    return name.rstrip("'")


def compare_reference_matrices(G: FiniteGroup, sector: str) -> MatrixComparison:
    """Solve the sector system at the reference right-hand sides and
    classify per-row discrepancies against the transcribed matrix:
    row permutations within a prime family, per-row rational scalings,
    or anything else (flagged for review)."""
    ref_rows, ref_rhs, ref_matrix = reference_system(G, sector)
    sol = solve_irrep_quantities(G, sector, ref_rhs)
    if sol.row_labels != ref_rows:
        raise ContractViolation("irrep inventory disagrees with the reference")
    comp = MatrixComparison(sol, ref_rows, ref_matrix)
    for i, name in enumerate(sol.row_labels):
        got = sol.matrix[i]
        if got == ref_matrix[i]:
            comp.rows.append(RowComparison(name, "exact"))
            continue
        fam = [j for j, other in enumerate(ref_rows)
               if _family(other) == _family(name)]
        status, partner, scale = "other", None, None
        for j in fam:
            if got == ref_matrix[j]:
                status, partner = "permuted", ref_rows[j]
                break
            c = _row_scale(got, ref_matrix[j])
            if c is not None:
                if j == i:
                    status, partner, scale = "scaled", ref_rows[j], c
                else:
                    status, partner, scale = "scaled_permuted", ref_rows[j], c
                break
        comp.rows.append(RowComparison(name, status, partner, scale))
    return comp


def _row_scale(a, b):
    """c with a == c*b, or None."""
    pivot = next((k for k, v in enumerate(b) if v != 0), None)
    if pivot is None or b[pivot] == 0 or a[pivot] == 0:
        return None
    c = a[pivot] / b[pivot]
    return c if all(x == c * y for x, y in zip(a, b)) else None


# -- degeneracy-level verifications ---------------------------------------


def lens_series(G: FiniteGroup, gen: str, r: int, n_max: int):
    H = G.cyclic_subgroup(gen)
    return degeneracy_series(H, r % H.order, n_max)


def verify_isospectrality(G: FiniteGroup, n_max: int = 60) -> list[CheckResult]:
    """degeneracy_series(H, r) == degeneracy_series(G, Ind r) for every
    cyclic subgroup and twist, exactly and level by level."""
    out = []
    for gen in GENERATORS:
        H = G.cyclic_subgroup(gen)
        for r in range(H.order):
            lhs = lens_series(G, gen, r, n_max)
            ind = induce_twist(G, gen, r).as_dict()
            rhs = degeneracy_series(G, ind, n_max)
            if lhs.entries == rhs.entries:
                out.append(CheckResult(f"{G.name}:isospectral:{r};{gen}", True))
            else:
                bad = next(n for n in range(n_max + 1)
                           if lhs.entries[n] != rhs.entries[n])
                out.append(CheckResult(
                    f"{G.name}:isospectral:{r};{gen}", False,
                    f"first mismatch at level {bad}: "
                    f"{lhs.entries[bad]} != {rhs.entries[bad]}"))
    return out


def verify_dimension_relation(G: FiniteGroup, n_max: int = 60) -> CheckResult:
    """sum_A dim(A) d_n(A) = (n+1)^2 at every level."""
    table = character_table(G)
    per_irrep = [(ir.label.dimension, degeneracy_series(G, ir.name, n_max))
                 for ir in table]
    for n in range(n_max + 1):
        total = sum(dim * s.entries[n] for dim, s in per_irrep)
        if total != (n + 1) ** 2:
            return CheckResult(f"{G.name}:dimension_relation", False,
                               f"level {n}: {total} != {(n + 1) ** 2}")
    return CheckResult(f"{G.name}:dimension_relation", True)


def _central_relation_rows(G: FiniteGroup):
    """Rows (key, lhs irrep names, base irrep names, lens twist, factor,
    note).  The lhs/base lists describe virtual sums of irreps; [] means
    a literal zero left-hand side.

    The exact theorem behind all of these is the spin ladder
    sum_gamma Ind(w^t) - Ind_RST(w^t) = Res chi_{t/2} - Res chi_{(t-2)/2};
    rows marked "as printed" follow the classical write-up even where it
    deviates from the ladder, so those checks report honestly red."""
    two_i = G.presentation[2] == 5
    res1 = ["3'"] if two_i else ["3"]   # Res chi_1 by the table naming
    rows = [
        ("untwisted", ["1"], [], 0, Fraction(1, 2), ""),
        ("first_spinor", ["2s"], [], 1, Fraction(1), ""),
        ("spin1", res1, ["1"], 2, Fraction(1),
         "lhs is Res chi_1; named 3' by the 2I tables (documented interchange)"
         if two_i else ""),
    ]
    if G.presentation[2] == 3:
        rows.append(("spin3half_printed", [], ["2s"], 3, Fraction(1),
                     "printed claim: lhs vanishes (no 4s irrep)"))
        rows.append(("spin3half_actual", ["2s'", "2s''"], ["2s"], 3, Fraction(1),
                     "true tetrahedral instance: lhs = Res chi_3/2"))
    else:
        rows.append(("spin3half", ["4s"], ["2s"], 3, Fraction(1), ""))
    if two_i:
        rows.append(("spin2_printed", ["3'"], ["1"], 4, Fraction(1),
                     "printed claim (false under every labeling)"))
        rows.append(("spin2_actual", ["5"], ["3'"], 4, Fraction(1),
                     "true identity: S(5) = S(3') + sum S(4;gamma) - S(4;RST)"))
        rows.append(("spin5half", ["6s"], ["4s"], 5, Fraction(1), ""))
    return rows


def verify_central_relations(G: FiniteGroup, n_max: int = 60) -> list[CheckResult]:
    """Per-level checks of the relations expressing irrep quantities
    through low-twist lens quantities over all four cyclic subgroups,
    twist indices reduced mod the subgroup order."""
    out = []
    lens_cache: dict[tuple[str, int], tuple] = {}

    def lens(gen, r):
        q = G.cyclic_subgroup(gen).order
        key = (gen, r % q)
        if key not in lens_cache:
            lens_cache[key] = lens_series(G, gen, key[1], n_max).entries
        return lens_cache[key]

    series_cache: dict[str, tuple] = {}

    def irrep_series(name):
        if name not in series_cache:
            series_cache[name] = degeneracy_series(G, name, n_max).entries
        return series_cache[name]

    for key, lhs_names, base_names, twist, factor, note in _central_relation_rows(G):
        ok = True
        detail = note
        for n in range(n_max + 1):
            lhs = sum(irrep_series(nm)[n] for nm in lhs_names)
            rhs = sum(lens(gen, twist)[n] for gen in ("R", "S", "T"))
            rhs -= lens("RST", twist)[n]
            rhs += sum(irrep_series(nm)[n] for nm in base_names)
            rhs = factor * rhs
            if lhs != rhs:
                ok = False
                detail = (f"level {n}: {lhs} != {rhs}"
                          + (f" ({note})" if note else ""))
                break
        out.append(CheckResult(f"{G.name}:central:{key}", ok, detail))
    return out


@dataclass
class SunadaVerdict:
    equivalent: bool
    isospectral_verified: bool
    detail: str


def sunada_check(G: FiniteGroup, H1: SubgroupHandle, H2: SubgroupHandle,
                 twist1, twist2, n_max: int = 60) -> SunadaVerdict:
    """Test Gamma-equivalence of the induced twists by exact character
    equality; if equivalent, the two quotient spectra must agree level
    by level for the given twists."""
    ind1 = induce_character(H1, twist1)
    ind2 = induce_character(H2, twist2)
    if ind1 != ind2:
        return SunadaVerdict(False, False,
                             "induced characters differ; no spectral claim")
    s1 = degeneracy_series(H1, twist1, n_max)
    s2 = degeneracy_series(H2, twist2, n_max)
    if s1.entries != s2.entries:
        raise ContractViolation(
            "equivalent induced twists but unequal spectra: "
            "isospectrality failed (internal bug)")
    return SunadaVerdict(True, True,
                         f"equal series up to level {n_max}")


def artin_sufficiency(G: FiniteGroup) -> list[CheckResult]:
    """(i) the three cyclic subgroups meet every conjugacy class;
    (ii) their induced characters span the full character space over Q;
    (iii) the class/irrep counting identity."""
    out = []
    covered = set()
    for gen in ("R", "S", "T"):
        gi = G.generators[gen]
        for j in range(G.orders[gi]):
            covered.add(G.class_of[G.power(gi, j)])
    out.append(CheckResult(
        f"{G.name}:artin:class_coverage", len(covered) == G.num_classes,
        "" if len(covered) == G.num_classes else
        f"only {len(covered)} of {G.num_classes} classes met"))
    rank = _induced_span_rank(G, ("R", "S", "T"))
    out.append(CheckResult(
        f"{G.name}:artin:span_rank", rank == G.num_classes,
        f"rank {rank} of {G.num_classes}"))
    l, m, n = G.presentation
    count = 1 + 1 + (l - 1) + (m - 1) + (n - 1)
    out.append(CheckResult(
        f"{G.name}:artin:counting", count == G.num_classes,
        f"{count} vs {G.num_classes}"))
    return out


def _induced_span_rank(G: FiniteGroup, gens) -> int:
    rows = []
    table = character_table(G)
    for gen in gens:
        H = G.cyclic_subgroup(gen)
        for r in range(H.order):
            dec = induce_twist(G, gen, r).as_dict()
            rows.append([Fraction(dec.get(ir.name, 0)) for ir in table])
    return _rank(rows)


def verify_solved_system_consistency(G: FiniteGroup, sector: str,
                                     n_max: int = 24) -> CheckResult:
    """Every equation not used by the solver must be implied by the
    solved quantities: residuals vanish at degeneracy level."""
    _, rhs, _ = reference_system(G, sector)
    sol = solve_irrep_quantities(G, sector, rhs)
    irreps = sector_irreps(G, sector)
    basis = [lens_series(G, gen, r, n_max).entries for r, gen in rhs]
    solved = {}
    for i, ir in enumerate(irreps):
        solved[ir.name] = [
            sum(sol.matrix[i][b] * Fraction(basis[b][n]) for b in range(len(rhs)))
            for n in range(n_max + 1)
        ]
    for gen in GENERATORS:
        H = G.cyclic_subgroup(gen)
        parity = 1 if sector == "spinor" else 0
        for r in range(H.order):
            if H.group.neg_identity_index is not None and r % 2 != parity:
                continue
            dec = induce_twist(G, gen, r).as_dict()
            lhs = lens_series(G, gen, r, n_max).entries
            for n in range(n_max + 1):
                val = sum(dec.get(ir.name, 0) * solved[ir.name][n]
                          for ir in irreps)
                if val != lhs[n]:
                    return CheckResult(
                        f"{G.name}:system_consistency:{sector}", False,
                        f"equation {r};{gen} residual at level {n}")
    return CheckResult(f"{G.name}:system_consistency:{sector}", True)
