#!/usr/bin/env python
"""Full workflow on planted data: both lexicon tasks plus the unigram baselines.

Uses real lexicons and reviews when given, otherwise generates fixtures:

    python scripts/run_desk_experiment.py --work /tmp/affect2d-run
    python scripts/run_desk_experiment.py --work /tmp/yelp --sentiwordnet SWN.txt \\
        --inquirer inquirer.csv --reviews yelp_review.json --per-class 2500
"""

import argparse
import sys
import time
from pathlib import Path

from affect2d.cli import run
from affect2d.synthetic import planted_reviews, write_fixture_lexicons, write_reviews


def step(argv):
    print("$ affect2d " + " ".join(argv), flush=True)
    code = run(argv)
    if code:
        sys.exit(code)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--work", required=True)
    parser.add_argument("--sentiwordnet")
    parser.add_argument("--inquirer")
    parser.add_argument("--reviews")
    parser.add_argument("--per-class", type=int, default=None)
    parser.add_argument("--folds", type=int, default=10)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    work = Path(args.work)
    work.mkdir(parents=True, exist_ok=True)
    if args.sentiwordnet and args.inquirer:
        swn, gi = args.sentiwordnet, args.inquirer
    else:
        swn, gi = map(str, write_fixture_lexicons(work))
    reviews = args.reviews or str(write_reviews(planted_reviews(1000, args.seed), work / "reviews.jsonl"))
    per_class = {"polarity": args.per_class or 250, "intensity": args.per_class or 400}
    lex = ["--sentiwordnet", swn, "--inquirer", gi]
    common = ["--folds", str(args.folds), "--seed", str(args.seed), "--out", str(work / "reports")]

    start = time.perf_counter()
    for task in ("polarity", "intensity"):
        step(["build-dataset", "--reviews", reviews, "--task", task, "--per-class", str(per_class[task]),
              "--seed", str(args.seed), "--out", str(work / "data")])
        dataset = str(work / "data" / f"{task}_dataset.tsv")
        step(["evaluate", *lex, "--dataset", dataset, "--task", task, *common])
        step(["train", *lex, "--dataset", dataset, "--task", task, "--seed", str(args.seed),
              "--model", str(work / "models" / f"{task}.json")])
    polarity_data = str(work / "data" / "polarity_dataset.tsv")
    for mode in ("all", "adjadv", "adj", "topk"):
        step(["baseline", "--sentiwordnet", swn, "--dataset", polarity_data, "--task", "polarity",
              "--mode", mode, "--k", "2000", *common])
    step(["classify", *lex, "--model", str(work / "models" / "polarity.json"),
          "--model", str(work / "models" / "intensity.json"),
          "The pizza was AMAZING!!! loved it", "it was fine, a calm evening.",
          "the food was bland and the room was stale.", "TERRIBLE service!!! never again"])
    print(f"done in {time.perf_counter() - start:.1f}s; reports in {work / 'reports'}")


if __name__ == "__main__":
    main()
