"""Compiled vs pure-Python planarity kernel.

    python benchmarks/bench_kernel.py            # kernel calls only
    python benchmarks/bench_kernel.py --solver   # also decide_cr_le(P(10,3), 6) end to end

The end-to-end run uses a subprocess per kernel, with CROSSNUM_PURE_PYTHON
set for the fallback, because the solver binds its kernel at import.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import networkx as nx

from crossnum import _kernel_py
from crossnum.graph import Graph, build_gp, complete_graph

try:
    from crossnum import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def workloads() -> list[tuple[str, Graph]]:
    out = [("P(10,3)", build_gp((10, 3))), ("P(12,4)", build_gp((12, 4))), ("K7", complete_graph(7))]
    h = nx.gnm_random_graph(40, 110, seed=1)
    out.append(("planar-ish G(40,110)", Graph(40, list(h.edges()))))
    tri = nx.triangular_lattice_graph(6, 8)
    tri = nx.convert_node_labels_to_integers(tri)
    out.append(("triangular lattice", Graph(tri.number_of_nodes(), list(tri.edges()))))
    return out


def bench(impl, g: Graph, what: str, repeat: int) -> float:
    eu = [u for u, _ in g.edges]
    ev = [w for _, w in g.edges]
    fn = impl.planar if what == "planar" else impl.kuratowski
    t = timeit.Timer(lambda: fn(g.vertex_count, eu, ev))
    number, _ = t.autorange()
    return min(t.repeat(repeat, number)) / number


SOLVER_SNIPPET = """
import time
from crossnum.graph import build_gp
from crossnum.kernel import IMPLEMENTATION
from crossnum.solver import decide_cr_le
t = time.perf_counter()
d = decide_cr_le(build_gp((10, 3)), 6)
print(IMPLEMENTATION, d.status.value, round(time.perf_counter() - t, 2))
"""


def solver_run(pure: bool) -> str:
    env = dict(os.environ)
    env.pop("CROSSNUM_PURE_PYTHON", None)
    if pure:
        env["CROSSNUM_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SOLVER_SNIPPET], env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--solver", action="store_true", help="also time a full solver call per kernel")
    args = ap.parse_args()
    if _kernel_c is None:
        print("compiled kernel not built; only the fallback is available")
    print(f"{'workload':<22} {'call':<11} {'python us':>11} {'cython us':>11} {'speedup':>8}")
    for name, g in workloads():
        for what in ("planar", "kuratowski"):
            py = bench(_kernel_py, g, what, args.repeat)
            if _kernel_c is not None:
                c = bench(_kernel_c, g, what, args.repeat)
                print(f"{name:<22} {what:<11} {py * 1e6:>11.1f} {c * 1e6:>11.1f} {py / c:>7.1f}x")
            else:
                print(f"{name:<22} {what:<11} {py * 1e6:>11.1f} {'-':>11} {'-':>8}")
    if args.solver:
        for pure in (False, True):
            print("decide_cr_le(P(10,3), 6):", solver_run(pure))


if __name__ == "__main__":
    main()
