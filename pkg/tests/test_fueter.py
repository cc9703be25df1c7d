import pytest

from algebra import clifford, default_basis, parse_basis
from errors import BlockSizeTwo, NotInFP, NotOddPartition, SpecMismatch
from fueter import (PAIR_POLICIES, build_fueter_tree, count_fueter_trees,
                    even_case_descent, even_descent_target, export_dot,
                    laplacian_decomposition, reduced_tree, tau, unary_chain,
                    verify_fueter_tree, verify_general_fueter,
                    verify_polyharmonic)
from operators import cauchy_riemann, laplacian
from parse_input import parse_polynomial
from partitions import format_partition, parse_partition, whole
from poly import power_x, zero
from spaces import basis_polynomial, is_member_FP

QUATERNIONS = parse_basis(clifford(2), "1,e1,e2,e12")
CL4 = default_basis(clifford(4))


def test_unary_chain():
    assert [format_partition(P) for P in unary_chain(7)] == [
        "{1,2,3,4,5,6,7}",
        "{1}|{2}|{3,4,5,6,7}",
        "{1}|{2}|{3}|{4}|{5,6,7}",
        "{1}|{2}|{3}|{4}|{5}|{6}|{7}",
    ]
    assert len(unary_chain(1)) == 1


def test_tau_on_quaternionic_powers():
    f = power_x(QUATERNIONS, 3)
    g = tau(f, whole(3), 1)
    assert g == laplacian(f)
    assert cauchy_riemann(g).is_zero()
    assert tau(f, whole(3), 1, alpha=3) == g


def test_tau_on_a_singleton_block_is_zero():
    P = parse_partition("{1,2,3}|{4}|{5,6,7}")
    basis = parse_basis(clifford(6), "1,e1,e2,e3,e4,e5,e6,e123456")
    f = basis_polynomial(basis, P, (1, 1, 0))
    assert tau(f, P, 2) == zero(basis)


def test_tau_errors():
    P = parse_partition("{1}|{2,3}")
    with pytest.raises(BlockSizeTwo):
        tau(zero(QUATERNIONS), P, 2)
    with pytest.raises(NotInFP):
        tau(parse_polynomial(QUATERNIONS, "x1*x2"), whole(3), 1)
    with pytest.raises(SpecMismatch):
        tau(power_x(QUATERNIONS, 2), whole(3), 1, alpha=4)


def test_laplacian_decomposition_rejects_pairs():
    with pytest.raises(BlockSizeTwo):
        laplacian_decomposition(zero(QUATERNIONS), parse_partition("{1}|{2,3}"))


def test_laplacian_decomposition_on_one_block():
    f = power_x(QUATERNIONS, 4)
    parts = laplacian_decomposition(f, whole(3))
    assert [j for j, _ in parts] == [1]
    assert parts[0][1] == laplacian(f)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_quaternionic_fueter_theorem(m):
    f = power_x(QUATERNIONS, m)
    report = verify_general_fueter(f, whole(3))
    assert report.passed, report.lines()
    assert report.result == laplacian(f)
    assert verify_polyharmonic(f, whole(3)).passed


def test_fueter_report_lines():
    report = verify_general_fueter(power_x(QUATERNIONS, 2), whole(3))
    lines = report.lines()
    assert lines[0] == "general Fueter theorem for P = {1,2,3}"
    assert any(line.startswith("  [ok]") for line in lines)


def test_fueter_needs_an_odd_member():
    with pytest.raises(NotOddPartition):
        verify_general_fueter(power_x(CL4, 2), whole(4))
    with pytest.raises(NotInFP):
        verify_polyharmonic(parse_polynomial(QUATERNIONS, "x1*x2"), whole(3))


def test_even_case_descent():
    assert format_partition(even_descent_target(4)) == "{1}|{2}|{3,4}"
    for m in (2, 3):
        assert even_case_descent(power_x(CL4, m)).passed
    with pytest.raises(SpecMismatch):
        even_case_descent(power_x(QUATERNIONS, 2))


def test_quaternionic_tree():
    tree = build_fueter_tree(whole(3))
    assert tree.height == 1
    assert tree.graph.number_of_nodes() == 2
    assert tree.leaves() == ["{1}|{2}|{3}"]
    assert tree.graph.nodes[tree.leaves()[0]]['label'] == "M"
    (_, _, data), = tree.graph.edges(data=True)
    assert data['label'] == "Δ"


def test_binary_tree_merged_and_unmerged():
    P = parse_partition("{1,2,3}|{4}|{5,6,7}")
    merged = build_fueter_tree(P)
    assert merged.height == 2
    assert merged.graph.number_of_nodes() == 4
    labels = sorted(d['label'] for _, _, d in merged.graph.out_edges(merged.root_key, data=True))
    assert labels == ["tau 1, alpha=1", "tau 3, alpha=5"]
    assert len(merged.leaves()) == 1
    unmerged = build_fueter_tree(P, merge=False)
    assert unmerged.graph.number_of_nodes() == 5
    assert len(unmerged.leaves()) == 2
    assert merged.graph.graph['weight'] == "-2"


def test_unary_tree_of_seven():
    tree = build_fueter_tree(whole(7))
    assert tree.height == 3
    assert all(tree.graph.out_degree(v) <= 1 for v in tree.graph)
    assert list(reduced_tree(tree).edges) == [
        ((7,), (5, 1, 1)), ((5, 1, 1), (3, 1, 1, 1, 1)), ((3, 1, 1, 1, 1), (1,) * 7),
    ]


def test_pair_policies():
    assert PAIR_POLICIES["smallest"]((1, 2, 3)) == (1, 2)
    assert PAIR_POLICIES["largest"]((1, 2, 3)) == (2, 3)
    assert PAIR_POLICIES["ends"]((1, 2, 3)) == (1, 3)
    tree = build_fueter_tree(whole(5), "largest")
    assert "{1,2,3}|{4}|{5}" in tree.graph
    with pytest.raises(SpecMismatch):
        build_fueter_tree(whole(5), "middle")


def test_trees_need_odd_partitions():
    with pytest.raises(NotOddPartition):
        build_fueter_tree(whole(4))


@pytest.mark.parametrize("n, trees", [(1, 0), (3, 1), (5, 2), (7, 4)])
def test_tree_counts(n, trees):
    assert count_fueter_trees(n) == trees


def test_dot_export_is_deterministic():
    P = parse_partition("{1,2,3}|{4}|{5,6,7}")
    dot = export_dot(build_fueter_tree(P))
    assert dot == export_dot(build_fueter_tree(P))
    assert dot.startswith("digraph fueter {\n")
    assert dot.endswith("}\n")
    assert dot.count("->") == 4
    assert 'label="M"' in dot
    assert "height=2;" in dot
    assert dot.splitlines()[5] == '  n0 [label="{1,2,3}|{4}|{5,6,7}"];'


def test_tree_walk_on_quaternionic_power():
    tree = build_fueter_tree(whole(3))
    f = power_x(QUATERNIONS, 3)
    report = verify_fueter_tree(tree, f)
    assert report.passed, report.lines()
    with pytest.raises(NotInFP):
        verify_fueter_tree(tree, parse_polynomial(QUATERNIONS, "x1*x2"))


def test_tree_walk_on_a_two_block_member():
    basis = parse_basis(clifford(6), "1,e1,e2,e3,e4,e5,e6,e123456")
    P = parse_partition("{1}|{2,3,4}|{5,6,7}")
    f = basis_polynomial(basis, P, (0, 1, 1))
    assert is_member_FP(f, P)
    report = verify_fueter_tree(build_fueter_tree(P), f)
    assert report.passed, report.lines()
