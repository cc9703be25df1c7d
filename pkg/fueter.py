"""
Fueter-type descent: the tau_j operators, the Laplacian decomposition over the
blocks of a partition, iterated-Laplacian checks and Fueter trees.
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx

from config import TREE_SETTINGS
from errors import (BlockSizeTwo, NotInFP, NotOddPartition, SpecMismatch,
                    VerificationFailed)
from operators import cauchy_riemann, delta2, laplacian
from partitions import (SetPartition, dunkl_weight,
                        format_partition, is_all_singletons, is_odd_partition,
                        odd_partition_count, refine, shape, whole)
from poly import Polynomial, require_equal, scale, sum_polys, zero
from spaces import is_member_FP, is_P_slice

logger = logging.getLogger(__name__)

PairPolicy = Callable[[Sequence[int]], Tuple[int, int]]

PAIR_POLICIES: Dict[str, PairPolicy] = {
    "smallest": lambda block: (block[0], block[1]),
    "largest": lambda block: (block[-2], block[-1]),
    "ends": lambda block: (block[0], block[-1]),
}


def _policy(pair_policy: Union[str, PairPolicy, None]) -> PairPolicy:
    if pair_policy is None:
        return PAIR_POLICIES["smallest"]
    if callable(pair_policy):
        return pair_policy
    try:
        return PAIR_POLICIES[pair_policy]
    except KeyError:
        raise SpecMismatch(f"unknown pair policy {pair_policy!r}; choose from {sorted(PAIR_POLICIES)}") from None


def _tau_raw(f: Polynomial, block: Sequence[int], alpha: int) -> Polynomial:
    return scale(delta2(f, alpha), Fraction(1 - len(block), 2))


def tau(f: Polynomial, P: SetPartition, j: int, alpha: Optional[int] = None,
        pair: Optional[Tuple[int, int]] = None, check: bool = True) -> Polynomial:
    """
    tau_j f = ((1 - |A_j|)/2) delta2_alpha f.

    Args:
        f: Member of F_P
        P: Partition with no block of size two at j
        j: 1-based block index
        alpha: Element of A_j used by delta2 (min(A_j) by default)
        pair: Elements split off in the target space (two smallest by default)
        check: Validate f, the alpha-independence and the target membership

    Raises:
        BlockSizeTwo: |A_j| = 2
        NotInFP: f is not in F_P
    """
    block = P.block(j)
    if len(block) == 2:
        raise BlockSizeTwo(f"tau is undefined on the two-element block A{j} = {set(block)}")
    if check and not is_member_FP(f, P):
        raise NotInFP(f"input is not in F_{format_partition(P)}")
    if len(block) == 1:
        return zero(f.basis)
    if alpha is None:
        alpha = block[0]
    elif alpha not in block:
        raise SpecMismatch(f"alpha {alpha} is not in A{j} = {set(block)}")
    g = _tau_raw(f, block, alpha)
    if check:
        other = block[-1] if alpha != block[-1] else block[0]
        require_equal(_tau_raw(f, block, other), g, f"tau_{j} independent of alpha in A{j}")
        target = refine(P, j, *(pair or (block[0], block[1])))
        if not is_member_FP(g, target):
            raise VerificationFailed(f"tau_{j} f lies in F_{format_partition(target)}", next(iter(g.terms), None))
    return g


def laplacian_decomposition(f: Polynomial, P: SetPartition, check: bool = True) -> List[Tuple[int, Polynomial]]:
    """Delta_M f as the sum of tau_j f over the blocks with |A_j| > 2."""
    for j, block in enumerate(P.blocks, start=1):
        if len(block) == 2:
            raise BlockSizeTwo(f"block A{j} = {set(block)} has size two")
    if check and not is_member_FP(f, P):
        raise NotInFP(f"input is not in F_{format_partition(P)}")
    parts = [(j, tau(f, P, j, check=check)) for j, block in enumerate(P.blocks, start=1) if len(block) > 2]
    if check:
        require_equal(sum_polys(f.basis, (g for _, g in parts)), laplacian(f),
                      "Delta_M f = sum of tau_j f")
    return parts


@dataclass
class FueterReport:
    """Steps and checks of one Fueter-type verification."""
    title: str
    partition: SetPartition
    steps: List[Tuple[str, Polynomial]] = field(default_factory=list)
    checks: List[Tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def result(self) -> Optional[Polynomial]:
        return self.steps[-1][1] if self.steps else None

    def check(self, name: str, ok: bool) -> bool:
        self.checks.append((name, ok))
        logger.debug("%s: %s", name, "ok" if ok else "FAILED")
        return ok

    def lines(self) -> List[str]:
        out = [f"{self.title} for P = {format_partition(self.partition)}"]
        out.extend(f"  {label} = {g}" for label, g in self.steps)
        out.extend(f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in self.checks)
        return out


def unary_chain(n: int) -> List[SetPartition]:
    """{[n]} followed by repeated splitting of the two smallest elements of the last block."""
    chain = [whole(n)]
    while len(chain[-1].blocks[-1]) > 2:
        P = chain[-1]
        last = P.block(P.length)
        chain.append(refine(P, P.length, last[0], last[1]))
    return chain


def _fueter_exponent(P: SetPartition) -> int:
    return (P.n - P.length) // 2


def _require_odd_member(f: Polynomial, P: SetPartition) -> None:
    if not is_odd_partition(P):
        raise NotOddPartition(f"{format_partition(P)} has a block of even size")
    if not is_member_FP(f, P):
        raise NotInFP(f"input is not in F_{format_partition(P)}")


def verify_general_fueter(f: Polynomial, P: SetPartition) -> FueterReport:
    """
    Check that Delta^((n-l)/2) f is monogenic and P-slice, with every
    intermediate iterate P-slice.
    """
    _require_odd_member(f, P)
    report = FueterReport("general Fueter theorem", P)
    s = _fueter_exponent(P)
    chain = unary_chain(P.n) if P.length == 1 else None
    g = f
    for i in range(1, s + 1):
        g = laplacian(g)
        report.steps.append((f"Delta^{i} f", g))
        report.check(f"Delta^{i} f is P-slice", bool(is_P_slice(g, P)))
        if chain is not None:
            report.check(f"Delta^{i} f lies in F_{format_partition(chain[i])}", is_member_FP(g, chain[i]))
    report.check(f"Delta^{s} f is monogenic", cauchy_riemann(g).is_zero())
    if s == 0:
        report.steps.append(("f", g))
        report.check("f is P-slice", bool(is_P_slice(g, P)))
    return report


def verify_polyharmonic(f: Polynomial, P: SetPartition) -> FueterReport:
    _require_odd_member(f, P)
    report = FueterReport("polyharmonicity", P)
    order = _fueter_exponent(P) + 1
    g = laplacian(f, order)
    report.steps.append((f"Delta^{order} f", g))
    report.check(f"Delta^{order} f = 0", g.is_zero())
    return report


def even_descent_target(n: int) -> SetPartition:
    return SetPartition(n, tuple((i,) for i in range(1, n - 1)) + ((n - 1, n),))


def even_case_descent(f: Polynomial) -> FueterReport:
    """For slice-regular f on an even n, check Delta^((n-2)/2) f lies in F_{{1},...,{n-2},{n-1,n}}."""
    n = f.n
    if n % 2:
        raise SpecMismatch(f"even-case descent needs even n, got n = {n}")
    root = whole(n)
    if not is_member_FP(f, root):
        raise NotInFP(f"input is not slice-regular (not in F_{format_partition(root)})")
    target = even_descent_target(n)
    report = FueterReport("even-case descent", root)
    s = (n - 2) // 2
    g = laplacian(f, s)
    report.steps.append((f"Delta^{s} f", g))
    report.check(f"Delta^{s} f lies in F_{format_partition(target)}", is_member_FP(g, target))
    return report


@dataclass
class FueterTree:
    root: SetPartition
    graph: nx.DiGraph
    root_key: str
    merged: bool

    @property
    def height(self) -> int:
        return self.graph.graph['height']

    def partition(self, key) -> SetPartition:
        return self.graph.nodes[key]['partition']

    def leaves(self) -> List[str]:
        return [v for v in self.graph.nodes if self.graph.out_degree(v) == 0]


def _node_label(P: SetPartition) -> str:
    return TREE_SETTINGS['leaf_label'] if is_all_singletons(P) else format_partition(P)


def build_fueter_tree(P: SetPartition, pair_policy: Union[str, PairPolicy, None] = None,
                      merge: Optional[bool] = None) -> FueterTree:
    """
    Tree of spaces below F_P; each edge refines one block of size > 2.

    With merge (the default) children with equal partitions share a node,
    otherwise every path keeps its own nodes.
    """
    if not is_odd_partition(P):
        raise NotOddPartition(f"{format_partition(P)} has a block of even size")
    if merge is None:
        merge = TREE_SETTINGS['merge_leaves']
    choose = _policy(pair_policy)
    graph = nx.DiGraph(root=format_partition(P), weight=str(dunkl_weight(P)),
                       height=_fueter_exponent(P))
    root_key = format_partition(P)
    graph.add_node(root_key, partition=P, label=_node_label(P))
    queue = deque([root_key])
    while queue:
        key = queue.popleft()
        parent = graph.nodes[key]['partition']
        splits = [(j, b) for j, b in enumerate(parent.blocks, start=1) if len(b) > 2]
        for j, block in splits:
            i1, i2 = choose(block)
            child = refine(parent, j, i1, i2)
            child_key = format_partition(child) if merge else f"{key}/{j}"
            if child_key not in graph:
                graph.add_node(child_key, partition=child, label=_node_label(child))
                queue.append(child_key)
            label = TREE_SETTINGS['single_edge_label'] if len(splits) == 1 else f"tau {j}, alpha={block[0]}"
            graph.add_edge(key, child_key, j=j, pair=(i1, i2), alpha=block[0], label=label)
    depth = nx.dag_longest_path_length(graph)
    if depth != graph.graph['height']:
        raise VerificationFailed(f"Fueter tree height {graph.graph['height']}, got {depth}")
    logger.info("Fueter tree for %s: %d nodes, %d edges", P, graph.number_of_nodes(), graph.number_of_edges())
    return FueterTree(P, graph, root_key, merge)


def count_fueter_trees(n: int) -> int:
    return odd_partition_count(n) - 1


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def export_dot(tree: FueterTree) -> str:
    """
    Graphviz text for the tree, written directly from the networkx graph.

    Node ids follow graph insertion order (root first, then breadth-first
    children), so the output is byte-stable for a given partition and pair
    policy. networkx only writes DOT through pydot or pygraphviz, neither of
    which is a dependency here.
    """
    graph = tree.graph
    ids = {key: f"n{i}" for i, key in enumerate(graph.nodes)}
    lines = [
        "digraph fueter {",
        f"  rankdir={TREE_SETTINGS['rankdir']};",
        f"  label={_quote('F_' + graph.graph['root'] + ', height=' + str(graph.graph['height']) + ', kappa=' + graph.graph['weight'])};",
        f"  height={graph.graph['height']};",
        f"  kappa={_quote(graph.graph['weight'])};",
    ]
    for key, data in graph.nodes(data=True):
        lines.append(f"  {ids[key]} [label={_quote(data['label'])}];")
    for u, v, data in graph.edges(data=True):
        lines.append(f"  {ids[u]} -> {ids[v]} [label={_quote(data['label'])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reduced_tree(tree: FueterTree) -> nx.DiGraph:
    """Quotient of the tree by partition shape."""
    reduced = nx.DiGraph()
    for key in tree.graph.nodes:
        reduced.add_node(shape(tree.partition(key)))
    for u, v in tree.graph.edges:
        reduced.add_edge(shape(tree.partition(u)), shape(tree.partition(v)))
    return reduced


def verify_fueter_tree(tree: FueterTree, f: Polynomial) -> FueterReport:
    """Walk every edge with tau, checking weights, memberships and the Laplacian sums."""
    graph = tree.graph
    if not is_member_FP(f, tree.root):
        raise NotInFP(f"input is not in F_{format_partition(tree.root)}")
    report = FueterReport("Fueter tree", tree.root)
    stack = [(tree.root_key, f, "f")]
    while stack:
        key, g, name = stack.pop()
        P = graph.nodes[key]['partition']
        edges = list(graph.out_edges(key, data=True))
        if not edges:
            report.check(f"{name} is monogenic", cauchy_riemann(g).is_zero())
            continue
        images = []
        for _, child_key, data in edges:
            child = graph.nodes[child_key]['partition']
            h = tau(g, P, data['j'], alpha=data['alpha'], check=False)
            images.append(h)
            report.check(f"weight of {format_partition(child)} is weight of {format_partition(P)} + 1",
                         dunkl_weight(child) == dunkl_weight(P) + 1)
            report.check(f"tau_{data['j']} {name} lies in F_{format_partition(child)}", is_member_FP(h, child))
            stack.append((child_key, h, f"tau_{data['j']} {name}"))
        report.check(f"Delta {name} = sum of tau_j {name} on {format_partition(P)}",
                     sum_polys(g.basis, images) == laplacian(g))
    return report
