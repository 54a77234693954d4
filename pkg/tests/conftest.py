from pathlib import Path

import pytest

from flowdecomp.network import Network

DATA = Path(__file__).parent / "data"
S, A, B, T = 0, 1, 2, 3


def diamond():
    return Network(4, S, T, ((S, A, 1), (S, B, 1), (A, T, 1), (B, T, 1)))


def n3():
    return Network(4, S, T, ((S, A, 1), (S, B, 1), (A, T, 1), (B, T, 1), (A, B, 1), (B, A, 1)))


def n4():
    return Network(4, S, T, ((S, A, 1), (A, T, 1), (S, B, 1), (B, T, 1), (A, B, 1)))


def single(cap=5):
    return Network(2, 0, 1, ((0, 1, cap),))


def path2():
    # s -> a -> t, vertex ids s=0, a=1, t=2
    return Network(3, 0, 2, ((0, 1, 1), (1, 2, 1)))


def dangling():
    # s -> a -> t plus s -> b where b has no outgoing edge; s=0 a=1 b=2 t=3
    return Network(4, S, T, ((S, A, 1), (A, T, 1), (S, B, 1)))


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    order = ["1", "2", "3", "4", "5", "5r", "6", "6r", "7", "8", "9", "10", "11"]
    for key in sorted(results, key=lambda k: order.index(k) if k in order else 99):
        ok, detail = results[key]
        terminalreporter.write_line(f"criterion {key:>3}: {'PASS' if ok else 'FAIL'}  {detail}")
