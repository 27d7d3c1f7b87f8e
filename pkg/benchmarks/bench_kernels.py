"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py --items 200 --txns 1000 --mean-size 8 --min-support 25
"""

import argparse
import time

from fpmine import _backend
from fpmine.apriori import apriori_gen, frequent_1_itemsets, mine_apriori
from fpmine.dhp import HashConfig, mine_dhp
from fpmine.ingest import GeneratorSpec, generate_synthetic
from fpmine.model import rank_matrix


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--items", type=int, default=200)
    parser.add_argument("--txns", type=int, default=1000)
    parser.add_argument("--mean-size", type=float, default=8)
    parser.add_argument("--min-support", type=int, default=25)
    parser.add_argument("--buckets", type=int, default=1009)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    db = generate_synthetic(GeneratorSpec(args.items, args.txns, args.mean_size, args.seed))
    _, indptr, data = db.arrays
    n_items = len(db.order_map)
    c2 = apriori_gen(frequent_1_itemsets(db, args.min_support))
    matrix = rank_matrix(c2.itemsets, 2, db.order_map)
    config = HashConfig(bucket_count=args.buckets)
    print(f"{len(db)} transactions, {n_items} items, |C2| = {len(c2)}, min_sup = {args.min_support}")

    modules = _backend.available()
    if len(modules) < 2:
        print("compiled kernels are not built; only the pure-Python backend is available")

    cases = {
        "count C2 + hash 3-subsets": lambda k: k.count_and_hash(indptr, data, matrix, n_items, 3,
                                                                 config.base, config.bucket_count),
        "trim against C2": lambda k: k.trim(indptr, data, matrix, n_items, 2),
    }
    results = {}
    for kernels in modules:
        _backend.kernels = kernels
        row = {name: best_of(lambda: fn(kernels), args.repeat) for name, fn in cases.items()}
        row["mine_apriori"] = best_of(lambda: mine_apriori(db, args.min_support), args.repeat)
        row["mine_dhp"] = best_of(lambda: mine_dhp(db, args.min_support, config), args.repeat)
        results[kernels.NAME] = row

    names = list(next(iter(results.values())))
    header = f"{'case':<28}" + "".join(f"{name:>12}" for name in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for case in names:
        line = f"{case:<28}" + "".join(f"{results[m][case]:>11.4f}s" for m in results)
        if len(results) == 2:
            line += f"{results['python'][case] / results['cython'][case]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
