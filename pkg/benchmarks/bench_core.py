"""Compare the compiled kernels with the numpy fallback.

Run with ``python3 benchmarks/bench_core.py [--repeat N]``.  Both backends
are imported directly, so the comparison does not depend on which one the
package picked at import time.
"""

import argparse
import timeit

from apdecomp import _pycore
from apdecomp.arith import as_modulus

try:
    from apdecomp import _core
except ImportError:
    _core = None


def cases():
    # (label, callable factory taking a backend module)
    for n in (1001, 4003, 10007):
        m = as_modulus(n)
        yield f"order_table n={n}", lambda mod, m=m: mod.order_table(m.n, m.lam, m.lam_primes)
    for n in (273, 819, 1729):
        m = as_modulus(n)
        ords = _pycore.order_table(m.n, m.lam, m.lam_primes)
        yield (f"ap_search 3AP n={n}",
               lambda mod, m=m, o=ords: mod.ap_search(m.n, m.phi, o, 3, True, 1, (m.n + 1) // 2, True))
    m = as_modulus(3613)
    ords = _pycore.order_table(m.n, m.lam, m.lam_primes)
    yield ("ap_search 4AP n=3613",
           lambda mod, m=m, o=ords: mod.ap_search(m.n, m.phi, o, 4, True, 1, (m.n + 1) // 2, True))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pycore)] + ([("compiled", _core)] if _core else [])
    if _core is None:
        print("compiled extension not built; timing the fallback only")
    print(f"{'case':28s}" + "".join(f"{name:>12s}" for name, _ in backends) + "  speedup")
    for label, fn in cases():
        times = []
        results = []
        for _, mod in backends:
            results.append(fn(mod))
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        if len(results) == 2:
            a, b = results
            same = (a == b).all() if hasattr(a, "all") else a == b
            assert same, f"backends disagree on {label}"
        cols = "".join(f"{t * 1e3:10.1f}ms" for t in times)
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:28s}{cols}{speed}")


if __name__ == "__main__":
    main()
