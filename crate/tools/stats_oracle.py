"""Reference values for the stats module tests (scipy / scikit-posthocs / statsmodels)."""
import itertools
import numpy as np
import scipy.stats as ss
import scikit_posthocs as sp
from statsmodels.stats.multitest import multipletests

DATASETS = {
    "separated": [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
    "ties": [[1, 1, 2, 3], [2, 3, 3, 4, 5], [5, 5, 6]],
    "two_groups": [[0.5, 1.7, 2.2, 3.1], [2.0, 2.5, 4.0, 6.1, 7.3]],
    "four_groups": [[3.2, 1.1, 4.4, 4.4, 0.9], [2.5, 2.5, 6.0, 7.1], [8.8, 9.1, 7.7, 6.0, 10.2, 9.9], [0.1, 0.3, 1.1, 2.5]],
    "overlap": [[10.0, 12.5, 11.1, 9.8, 13.3, 10.4], [11.9, 14.2, 12.2, 15.0, 10.4, 13.7], [9.1, 8.7, 10.0, 11.5, 9.9, 8.2], [12.0, 16.4, 14.9, 13.1, 15.5, 11.0], [10.0, 10.0, 12.5, 9.0, 11.1, 13.0]],
}

for name, groups in DATASETS.items():
    h, p = ss.kruskal(*groups)
    allv = np.concatenate([np.asarray(g, float) for g in groups])
    ranks = ss.rankdata(allv)
    n = len(allv)
    _, counts = np.unique(allv, return_counts=True)
    tie = np.sum(counts ** 3 - counts) / (12.0 * (n - 1))
    mean_ranks, off = [], 0
    for g in groups:
        mean_ranks.append(ranks[off:off + len(g)].mean()); off += len(g)
    pmat = sp.posthoc_dunn(groups, p_adjust=None).values
    pairs, zs, raw = [], [], []
    for i, j in itertools.combinations(range(len(groups)), 2):
        se = np.sqrt((n * (n + 1) / 12.0 - tie) * (1 / len(groups[i]) + 1 / len(groups[j])))
        z = (mean_ranks[i] - mean_ranks[j]) / se
        pz = 2 * ss.norm.sf(abs(z))
        assert abs(pz - pmat[i, j]) < 1e-12, (pz, pmat[i, j])
        pairs.append((i, j)); zs.append(z); raw.append(pmat[i, j])
    adj = multipletests(raw, method="holm")[1]
    print(f"// {name}")
    print(f"h: {h!r}, p: {p!r},")
    for (i, j), z, r, a in zip(pairs, zs, raw, adj):
        print(f"  ({i}, {j}, {z!r}, {r!r}, {a!r}),")

print("// holm hand case", multipletests([0.01, 0.02, 0.04], method="holm")[1])
print("// holm unsorted", list(multipletests([0.04, 0.001, 0.03, 0.2, 0.01], method="holm")[1]))
