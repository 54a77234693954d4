import pytest

from flowdecomp.decomposition import (
    BlockType,
    EdgeClass,
    NotMaximumError,
    classify_blocks,
    classify_edges,
    decompose,
    jump_exists,
    residual_sccs,
)
from flowdecomp.maxflow import max_flow
from flowdecomp.network import Network, validate_flow, zero_flow
from flowdecomp.oracle import classify_by_enumeration

from conftest import A, B, S, T, dangling, diamond, n3, n4, path2, single

Ess, C1, R2 = EdgeClass.ESSENTIAL, EdgeClass.DUMMY_I, EdgeClass.DUMMY_II


def test_single_edge_blocks():
    assert residual_sccs(max_flow(single()).flow) == [[0], [1]]


def test_n3_blocks():
    f = validate_flow(n3(), [1, 1, 1, 1, 0, 0])
    assert sorted(residual_sccs(f)) == [[S], [A, B], [T]]


def test_diamond_singletons():
    blocks = residual_sccs(max_flow(diamond()).flow)
    assert sorted(blocks) == [[0], [1], [2], [3]]


def test_blocks_reverse_topological():
    # every residual arc between blocks points to an earlier block
    dec = decompose(n4())
    from flowdecomp.network import residual_arcs

    for a in residual_arcs(dec.flow):
        assert dec.block_of[a.head] <= dec.block_of[a.tail]


def test_non_maximum_rejected():
    with pytest.raises(NotMaximumError):
        residual_sccs(zero_flow(diamond()))


@pytest.mark.parametrize(
    "net, expected",
    [
        (diamond(), [Ess] * 4),
        (n3(), [Ess, Ess, Ess, Ess, C1, C1]),
        (n4(), [Ess, Ess, Ess, Ess, R2]),
        (dangling(), [Ess, Ess, R2]),
    ],
)
def test_classify_edges(net, expected):
    f = max_flow(net).flow
    assert classify_edges(f, residual_sccs(f)) == expected


def test_classify_blocks_n3():
    dec = decompose(n3())
    types = {tuple(b): t for b, t in zip(dec.blocks, dec.block_type)}
    assert types == {(S,): BlockType.START, (A, B): BlockType.TRANSFER, (T,): BlockType.END}


def test_classify_blocks_path_direct():
    dec = decompose(path2())
    assert dec.block_type[dec.block_of[1]] is BlockType.DIRECT


def test_classify_blocks_dangling_removable():
    dec = decompose(dangling())
    assert dec.block_type[dec.block_of[B]] is BlockType.REMOVABLE


def test_parallel_essential_edges_count_separately():
    # two parallel essential edges s->a make {a} a transfer set
    net = Network(3, 0, 2, ((0, 1, 1), (0, 1, 1), (1, 2, 2)))
    dec = decompose(net)
    assert dec.edge_class == (Ess, Ess, Ess)
    assert dec.block_type[dec.block_of[1]] is BlockType.TRANSFER


def test_classify_blocks_uses_given_classes():
    net = path2()
    blocks = [[0], [1], [2]]
    assert classify_blocks(net, [R2, R2], blocks)[1] is BlockType.REMOVABLE


def test_jump_n4():
    dec = decompose(n4())
    j = jump_exists(n4(), dec.edge_class, A, B)
    assert j.exists and j.path == (4,)


def test_jump_diamond_none():
    dec = decompose(diamond())
    assert not any(dec.jump(u, v).exists for u in range(4) for v in range(4))


def test_jump_n3_only_dummy_i():
    dec = decompose(n3())
    assert not dec.jump(A, B).exists


def test_jump_same_vertex_false():
    dec = decompose(n4())
    assert dec.jump(A, A) == (False, ())


def test_jump_witness_is_dummy_path():
    # s=0 a=1 b=2 c=3 t=4; a->b is dummy II, b->c carries 1 of 2 so {b, c} is a block
    net = Network(5, 0, 4, ((0, 1, 1), (1, 4, 1), (0, 2, 1), (2, 3, 2), (3, 4, 1), (1, 2, 1)))
    dec = decompose(net)
    assert classify_by_enumeration(net).edge_class == tuple(c.value for c in dec.edge_class)
    assert dec.edge_class[5] is R2 and dec.edge_class[3] is C1
    j = dec.jump(1, 3)
    assert j.exists
    assert j.path == (5, 3)
    tail = 1
    for e in j.path:
        assert dec.edge_class[e].is_dummy
        assert net.edges[e].tail == tail
        tail = net.edges[e].head
    assert tail == 3


def test_decomposition_s_t_separate():
    for net in (diamond(), n3(), n4(), single(), dangling()):
        dec = decompose(net)
        assert dec.block_of[net.source] != dec.block_of[net.sink]


def test_cross_block_edges_are_saturated_or_empty():
    for net in (diamond(), n3(), n4(), dangling()):
        dec = decompose(net)
        for i, (u, v, c) in enumerate(net.edges):
            if dec.block_of[u] != dec.block_of[v]:
                assert dec.flow.values[i] in (0, c)
