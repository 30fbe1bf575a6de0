#!/usr/bin/env python3
# Copyright 2026 The ckpoints Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes a rank-facts TSV for E_{i,k}, lo <= k <= hi, using PARI/GP.

ckpoints never computes ranks itself. This script is the one place where an
external system supplies them; every row is tagged with how PARI got it.
Needs the cypari (or cypari2) Python module.
"""

import argparse
import sys

try:
    from cypari import pari
except ImportError:  # pragma: no cover
    from cypari2 import Pari

    pari = Pari()


def models(k):
    return {
        1: [3, 0, 0, 0, k],
        2: [0, 4 * k, 0, 0, 16 * k * k],
        3: [0, -27, 0, 0, -1728 * k],
    }


def rank_of(coeffs):
    e = pari.ellinit(coeffs)
    lo, hi = int(pari.ellrank(e)[0]), int(pari.ellrank(e)[1])
    if lo == hi:
        return lo, "pari-ellrank"
    for effort in (2, 4):
        r = pari.ellrank(e, effort)
        lo, hi = int(r[0]), int(r[1])
        if lo == hi:
            return lo, "pari-ellrank"
    # Analytic rank; conditional on standard conjectures.
    return int(pari.ellanalyticrank(e)[0]), "pari-analytic"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--from", dest="lo", type=int, default=-100)
    ap.add_argument("--to", dest="hi", type=int, default=100)
    args = ap.parse_args()
    out = sys.stdout
    out.write("# Ranks of E_{i,k} computed with PARI/GP (external provenance).\n")
    out.write("# k\ti\trank\tsource\n")
    for k in range(args.lo, args.hi + 1):
        if k == 0:
            continue
        for i, coeffs in models(k).items():
            rank, source = rank_of(coeffs)
            out.write(f"{k}\t{i}\t{rank}\texternal:{source}\n")


if __name__ == "__main__":
    main()
