"""McKay graphs and the compactified class-version diagram.

The McKay graph has the irreducibles as nodes, adjacency from tensoring
with the defining 2-dimensional representation, and marks equal to the
dimensions; for the groups here it is the affine diagram A~_{q-1},
E6~, E7~ or E8~, which is checked through degree sequences, arm lengths
and the mark equation rather than generic graph isomorphism.

The compactified diagram is the dual, class-side picture: one circle of
cyclic twists per distinguished generator, folded by the reflection
r ~ q-r and merged along the computed class fusion.  Two poles (the
central classes) are joined by three arcs carrying l-1, m-1 and n-1
internal nodes; cutting two of the three arcs loose at the antipodal
pole recovers the affine diagram shape.  The tetrahedral cross-linking
(where the reflection maps the T circle onto the S circle instead of
folding each onto itself) falls out of the computed fusion, not out of
a special case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .characters import character_table, inner_product_int, spin_character
from .groups import ContractViolation, FiniteGroup


@dataclass(frozen=True)
class McKayGraph:
    group_name: str
    nodes: tuple            # display names
    marks: tuple            # dimensions
    adjacency: tuple        # tuple of tuples, non-negative ints
    ade_name: str

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def degree_sequence(self) -> list[int]:
        return sorted(self.degree(i) for i in range(len(self.nodes)))

    def mark_equation_holds(self) -> bool:
        k = len(self.nodes)
        return all(2 * self.marks[i] == sum(self.adjacency[i][j] * self.marks[j]
                                            for j in range(k))
                   for i in range(k))

    def arm_lengths(self) -> list[int] | None:
        """Arm lengths from the unique trivalent node (E-type shapes)."""
        k = len(self.nodes)
        tri = [i for i in range(k) if self.degree(i) == 3]
        if len(tri) != 1:
            return None
        arms = []
        for nb in range(k):
            if not self.adjacency[tri[0]][nb]:
                continue
            length, prev, cur = 1, tri[0], nb
            while True:
                nxt = [j for j in range(k)
                       if self.adjacency[cur][j] and j != prev]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        return sorted(arms)

    def to_json(self) -> dict:
        return {
            "schema": "spaceforms/1",
            "kind": "mckay_graph",
            "group": self.group_name,
            "ade": self.ade_name,
            "nodes": [{"name": n, "mark": m}
                      for n, m in zip(self.nodes, self.marks)],
            "adjacency": [list(row) for row in self.adjacency],
        }


def _classify_ade(G: FiniteGroup, graph_nodes, adjacency, marks) -> str:
    k = len(graph_nodes)
    degs = sorted(sum(adjacency[i]) for i in range(k))
    if all(d == 2 for d in degs):
        return f"A~{k - 1}"
    arms = McKayGraph(G.name, tuple(graph_nodes), tuple(marks),
                      tuple(map(tuple, adjacency)), "").arm_lengths()
    shapes = {(2, 2, 2): "E6~", (1, 3, 3): "E7~", (1, 2, 5): "E8~"}
    if arms and tuple(arms) in shapes:
        return shapes[tuple(arms)]
    raise ContractViolation(f"McKay graph of {G.name} is not an affine ADE diagram")


def mckay_graph(G: FiniteGroup) -> McKayGraph:
    """Adjacency <chi_half * chi_B, chi_C>, verified symmetric with the
    affine mark equation, and classified by shape."""
    table = character_table(G)
    chi_half = spin_character(G, 1)
    k = len(table)
    adjacency = [[0] * k for _ in range(k)]
    for i, a in enumerate(table):
        prod = chi_half * a.char
        for j, b in enumerate(table):
            adjacency[i][j] = inner_product_int(b.char, prod)
    for i in range(k):
        for j in range(k):
            if adjacency[i][j] != adjacency[j][i]:
                raise ContractViolation("McKay adjacency is not symmetric")
    if len(G) > 1 and any(adjacency[i][i] for i in range(k)):
        raise ContractViolation("unexpected self-adjacency in McKay graph")
    marks = [ir.label.dimension for ir in table]
    names = [ir.name for ir in table]
    graph = McKayGraph(G.name, tuple(names), tuple(marks),
                       tuple(map(tuple, adjacency)),
                       _classify_ade(G, names, adjacency, marks))
    if not graph.mark_equation_holds():
        raise ContractViolation("affine mark equation fails")
    if G.neg_identity_index is not None:
        spin = [ir.label.spinor for ir in table]
        for i in range(k):
            for j in range(k):
                if adjacency[i][j] and spin[i] == spin[j]:
                    raise ContractViolation(
                        "McKay graph not bipartite between spinor sectors")
    return graph


@dataclass(frozen=True)
class CompactifiedDiagram:
    """Two trivial poles joined by three arcs of fused twist classes."""
    group_name: str
    poles: tuple                  # ("E", "-E")
    arcs: dict                    # generator -> list of internal class labels
    reflection: dict              # generator -> "self" or the partner generator
    adjacency: dict               # class label -> sorted tuple of neighbours
    edges: tuple                  # sorted tuple of (label, label) pairs

    @property
    def arc_sizes(self) -> dict:
        return {gen: len(arc) for gen, arc in self.arcs.items()}

    @property
    def internal_node_count(self) -> int:
        return len({lab for arc in self.arcs.values() for lab in arc})

    def node_count(self) -> int:
        return self.internal_node_count + 2

    def edges_at(self, label: str) -> list[tuple[str, str]]:
        return [e for e in self.edges if label in e]

    def relink_arm_lengths(self, keep: str) -> list[int]:
        """Cut the two arcs other than `keep` loose at the antipodal
        pole; return the arm lengths of the resulting star at the
        identity pole."""
        drop = [(arc[-1] if arc else self.poles[0], self.poles[1])
                for gen, arc in self.arcs.items() if gen != keep]
        edges = set(self.edges)
        for a, b in drop:
            key = tuple(sorted((a, b)))
            if key not in edges:
                raise ContractViolation(f"expected edge {key} missing")
            edges.discard(key)
        # walk arms from the identity pole
        adj: dict[str, list[str]] = {}
        for a, b in edges:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
        arms = []
        root = self.poles[0]
        for nb in adj.get(root, []):
            length, prev, cur = 1, root, nb
            while True:
                nxt = [x for x in adj.get(cur, []) if x != prev]
                if not nxt:
                    break
                if len(nxt) > 1:
                    raise ContractViolation("relinked graph is not a star of paths")
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        return sorted(arms)

    def to_json(self) -> dict:
        return {
            "schema": "spaceforms/1",
            "kind": "compactified_diagram",
            "group": self.group_name,
            "poles": list(self.poles),
            "arcs": {gen: list(arc) for gen, arc in self.arcs.items()},
            "reflection": dict(self.reflection),
            "edges": [list(e) for e in self.edges],
        }


def compactified_diagram(G: FiniteGroup) -> CompactifiedDiagram:
    """Build the class-version diagram from the computed class fusion."""
    if not G.presentation:
        raise ValueError("compactified diagram needs the R/S/T presentation")
    l, m, n = G.presentation
    label = lambda idx: G.class_labels[G.class_of[idx]]
    edges = set()
    arcs = {}
    reflection = {}
    for gen, arm in (("R", l - 1), ("S", m - 1), ("T", n - 1)):
        gi = G.generators[gen]
        q = G.orders[gi]
        ring = [label(G.power(gi, j)) for j in range(q)]
        for j in range(q):
            a, b = ring[j], ring[(j + 1) % q]
            if a == b:
                raise ContractViolation("adjacent twists fused to one class")
            edges.add(tuple(sorted((a, b))))
        arcs[gen] = ring[1:1 + arm]
        # where does the reflection r -> q-r send this generator's arc?
        partner = None
        for other in ("R", "S", "T"):
            oi = G.generators[other]
            if G.orders[oi] != q:
                continue
            if all(G.class_of[G.power(gi, q - j)] == G.class_of[G.power(oi, j)]
                   for j in range(1, q)):
                partner = "self" if other == gen else other
                break
        if partner is None:
            raise ContractViolation(f"reflection image of the {gen} circle "
                                    "is not a generator circle")
        reflection[gen] = partner
    if {len(a) for g, a in arcs.items()} and \
            sorted(len(a) for a in arcs.values()) != sorted((l - 1, m - 1, n - 1)):
        raise ContractViolation("arc sizes disagree with the presentation")
    adjacency: dict[str, list[str]] = {}
    for a, b in sorted(edges):
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    return CompactifiedDiagram(G.name, ("E", "-E"), arcs, reflection,
                               {k: tuple(sorted(v)) for k, v in adjacency.items()},
                               tuple(sorted(edges)))


def relink_matches_mckay(diagram: CompactifiedDiagram,
                         graph: McKayGraph) -> str | None:
    """The generator whose arc, kept attached at the antipodal pole,
    turns the compactified diagram into the affine shape; None if no
    choice works."""
    want = graph.arm_lengths()
    if want is None:
        return None
    for keep in diagram.arcs:
        try:
            if diagram.relink_arm_lengths(keep) == want:
                return keep
        except ContractViolation:
            continue
    return None


def class_correspondence(G: FiniteGroup) -> dict:
    """The two-to-one map from cyclic twists to conjugacy classes.

    Twists r = 0 and r = q/2 of every generator land on the trivial
    classes [E] and [-E]; each nontrivial class receives exactly two
    (generator, twist) pairs, either r and q-r of the same generator or
    a cross-generator pair where the classes fuse (tetrahedral case)."""
    entries = {}
    hits: dict[str, list] = {}
    for gen in ("R", "S", "T"):
        gi = G.generators[gen]
        q = G.orders[gi]
        for r in range(q):
            lab = G.class_labels[G.class_of[G.power(gi, r)]]
            entries[(gen, r)] = lab
            if r not in (0, q // 2):
                hits.setdefault(lab, []).append((gen, r))
    problems = []
    for gen in ("R", "S", "T"):
        q = G.orders[G.generators[gen]]
        if entries[(gen, 0)] != "E" or entries[(gen, q // 2)] != "-E":
            problems.append(f"{gen}: trivial twists do not land on E/-E")
    nontrivial = [lab for lab in G.class_labels if lab not in ("E", "-E")]
    for lab in nontrivial:
        if len(hits.get(lab, [])) != 2:
            problems.append(f"class {lab} receives {len(hits.get(lab, []))} twists")
    cross = sorted({tuple(sorted({g for g, _ in pair}))
                    for lab, pair in hits.items() if len({g for g, _ in pair}) > 1})
    return {
        "entries": entries,
        "two_to_one": not problems,
        "problems": problems,
        "pairs": hits,
        "cross_linked_generators": [list(c) for c in cross],
        "covers_all_nontrivial_classes": set(hits) == set(nontrivial),
    }


def export_dot(graph) -> str:
    """Deterministic DOT output for either graph flavour."""
    lines = ["graph {"]
    if isinstance(graph, McKayGraph):
        lines.append(f'  label="{graph.group_name}: {graph.ade_name}";')
        for name, mark in zip(graph.nodes, graph.marks):
            lines.append(f'  "{name}" [label="{name} ({mark})"];')
        k = len(graph.nodes)
        for i in range(k):
            for j in range(i, k):
                for _ in range(graph.adjacency[i][j] if i != j
                               else graph.adjacency[i][j] // 2):
                    lines.append(f'  "{graph.nodes[i]}" -- "{graph.nodes[j]}";')
    elif isinstance(graph, CompactifiedDiagram):
        lines.append(f'  label="{graph.group_name}: compactified class diagram";')
        nodes = ["E", "-E"] + sorted({lab for arc in graph.arcs.values()
                                      for lab in arc})
        for name in nodes:
            lines.append(f'  "{name}";')
        for a, b in graph.edges:
            lines.append(f'  "{a}" -- "{b}";')
    else:
        raise TypeError(f"cannot export {type(graph).__name__} as DOT")
    lines.append("}")
    return "\n".join(lines) + "\n"
