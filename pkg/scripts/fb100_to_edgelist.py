"""Convert a Facebook100 ``.mat`` file into an edge list plus gender metadata.

    pip install scipy
    python scripts/fb100_to_edgelist.py Smith60.mat smith.edges smith.tsv

The matrix file holds a sparse adjacency ``A`` and a node attribute table
``local_info`` whose second column is gender (1, 2, or 0 for missing).
Nodes with missing gender are dropped together with their edges; label 1 is
assigned to gender code 1.  Self-loops are discarded.
"""

import argparse

import numpy as np
from scipy.io import loadmat
from scipy.sparse import triu


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("mat")
    ap.add_argument("edges_out")
    ap.add_argument("labels_out")
    ap.add_argument("--one-code", type=int, default=1,
                    help="gender code mapped to label 1 (default 1)")
    args = ap.parse_args()

    data = loadmat(args.mat)
    adj = data["A"].tocsr()
    gender = np.asarray(data["local_info"])[:, 1].astype(int)
    keep = gender != 0
    sub = triu(adj[keep][:, keep], k=1).tocoo()
    ids = np.flatnonzero(keep)
    with open(args.edges_out, "w", encoding="utf-8") as fh:
        for i, j in zip(sub.row, sub.col):
            fh.write(f"{ids[i]} {ids[j]}\n")
    with open(args.labels_out, "w", encoding="utf-8") as fh:
        for v in ids:
            fh.write(f"{v}\t{int(gender[v] == args.one_code)}\n")
    print(f"{keep.sum()} labelled nodes, {sub.nnz} edges")


if __name__ == "__main__":
    main()
