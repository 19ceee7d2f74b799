#!/usr/bin/env python3
"""Brute-force entropy / information-gain oracle for the weather fixture.

Independent of the C++ build: counts partitions directly from the CSV and
prints the values frozen into tests/unit/test_c45.cpp and the acceptance
suite. Run: python3 tests/oracles/c45_oracle.py data/weather.csv
"""
import csv
import math
import sys
from collections import Counter


def entropy(labels):
    n = len(labels)
    return -sum((c / n) * math.log2(c / n) for c in Counter(labels).values())


def main(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    labels = [r[-1] for r in body]
    base = entropy(labels)
    print(f"entropy(9,5) = {entropy(['+'] * 9 + ['-'] * 5):.9f}")
    print(f"entropy(dataset) = {base:.9f}")
    gains = {}
    for col, name in enumerate(header[:-1]):
        parts = {}
        for r in body:
            parts.setdefault(r[col], []).append(r[-1])
        rem = sum(len(p) / len(body) * entropy(p) for p in parts.values())
        gains[name] = base - rem
        print(f"gain({name}) = {gains[name]:.9f}")
    print("argmax =", max(header[:-1], key=lambda a: gains[a]))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/weather.csv")
