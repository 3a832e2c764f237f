"""Count-level assortativity and normalisation for the bundled college summaries.

Only published edge counts are bundled, so r and its normalisation by the
published upper bounds can be recomputed; the bounds themselves need the
full network (see fb100_to_edgelist.py).
"""

from assortbounds.graph import EdgeCounts
from assortbounds.io import facebook_counts
from assortbounds.mixing import assortativity_from_counts


def main():
    for name, rec in sorted(facebook_counts().items()):
        ec = EdgeCounts(rec["m11"], rec["m10"], rec["m"] - rec["m11"] - rec["m10"])
        r = assortativity_from_counts(ec)
        print(f"{name:<10} n={rec['n']:>5} m={rec['m']:>6} n1={rec['n1']:>3} "
              f"m11={ec.m11:>4} m10={ec.m10:>5} m00={ec.m00:>6}  r={r:+.4f}  "
              f"r/r_upper(gs)={r / rec['r_upper_gs']:+.4f}  "
              f"r/r_upper(mgs)={r / rec['r_upper_mgs']:+.4f}")


if __name__ == "__main__":
    main()
