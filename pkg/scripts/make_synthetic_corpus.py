#!/usr/bin/env python
"""Write the fixture lexicons and a planted-cue review corpus to a directory.

    python scripts/make_synthetic_corpus.py --out /tmp/affect2d-demo --n 1000 --seed 0
"""

import argparse

from affect2d.synthetic import planted_reviews, write_fixture_lexicons, write_reviews


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", required=True)
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--noise", type=float, default=0.03)
    args = parser.parse_args()
    swn, gi = write_fixture_lexicons(args.out)
    reviews = write_reviews(planted_reviews(args.n, args.seed, args.noise), f"{args.out}/reviews.jsonl")
    print(f"sentiwordnet: {swn}\ninquirer:     {gi}\nreviews:      {reviews}")


if __name__ == "__main__":
    main()
