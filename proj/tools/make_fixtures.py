#!/usr/bin/env python3
"""Expands the classification families into explicit instance lists.

Each block below is one parametric family of tuples (algebra, grading,
highest weight, center scalar); this script only instantiates the closed-form
parametrization at concrete ranks and writes fixtures/*.json.  Values are
exact fraction strings.
"""
from fractions import Fraction
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def frac(x):
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def factor(algebra, e_nodes, mu_coeffs, rank):
    e = [1 if i + 1 in e_nodes else 0 for i in range(rank)]
    mu = [0] * rank
    for node, coeff in mu_coeffs.items():
        mu[node - 1] = coeff
    return {"algebra": algebra, "e": e, "mu": mu}


def entry(factors, c):
    return {"factors": factors, "c": frac(c)}


def single(algebra, e_nodes, mu_coeffs, rank, c):
    return entry([factor(algebra, e_nodes, mu_coeffs, rank)], c)


def so_algebra(m):
    """so(m) as a canonical type name and rank, for m >= 5 odd or m >= 8 even."""
    if m % 2 == 1:
        return f"B{(m - 1) // 2}", (m - 1) // 2
    return f"D{m // 2}", m // 2


def weight2_h1_horizontal(max_rank):
    entries = []
    # period domains so(h+2) with mu = omega_1, including the low-rank
    # aliases so(3) = sl(2) and so(6) = sl(4)
    entries.append(single("A1", {1}, {1: 2}, 1, 0))
    entries.append(single("A3", {2}, {2: 1}, 3, 0))
    for m in range(5, 2 * max_rank + 2):
        name, r = so_algebra(m)
        if m % 2 == 0 and m < 8:
            continue
        if r > max_rank:
            continue
        entries.append(single(name, {1}, {1: 1}, r, 0))
    # grassmannian family with h = (1, 2r, 1)
    for r in range(1, max_rank + 1):
        entries.append(single(f"A{r}", {1}, {r: 1}, r, Fraction(-1, r + 1)))
    return entries


def weight2_h2_horizontal(max_rank):
    entries = [
        single("A2", {1}, {2: 1}, 2, Fraction(2, 3)),
        single("A2", {1}, {1: 1}, 2, Fraction(-2, 3)),
    ]
    for r in range(2, max_rank + 1):
        entries.append(single(f"A{r}", {2}, {1: 1}, r, Fraction(2, r + 1)))
    return entries


def weight2_h2_nonhorizontal(max_rank):
    entries = []
    for m in range(5, 2 * max_rank + 2):  # so(h+4) period domains
        name, r = so_algebra(m)
        if m % 2 == 0 and m < 8:
            continue
        if r > max_rank:
            continue
        entries.append(single(name, {2}, {1: 1}, r, 0))
    for r in range(2, max_rank + 1):  # special linear contact
        entries.append(single(f"A{r}", {1, r}, {1: 1}, r, 0))
    entries.append(single("A3", {1, 3}, {2: 1}, 3, 0))  # special linear contact on wedge
    entries.append(single("B2", {2}, {2: 1}, 2, 0))     # spinor contact, quaternionic
    entries.append(single("B3", {2}, {3: 1}, 3, 0))     # spinor contact, real
    for r in range(3, max_rank + 1):  # symplectic contact
        entries.append(single(f"C{r}", {1}, {1: 1}, r, 0))
    entries.append(single("G2", {2}, {1: 1}, 2, 0))     # exceptional contact
    return entries


def weight2_semisimple():
    a1 = factor("A1", {1}, {1: 1}, 1)
    b2_spin = factor("B2", {1}, {2: 1}, 2)  # so(5) spin = sp(4) standard
    return [entry([a1, a1], 0), entry([a1, b2_spin], 0)]


def weight2_k3(max_rank):
    entries = []
    for m in range(5, 2 * max_rank + 2):  # so(h+2), h >= 3
        name, r = so_algebra(m)
        if m % 2 == 0 and m < 8:
            continue
        if r > max_rank:
            continue
        entries.append(single(name, {1}, {1: 1}, r, 0))
    a1 = factor("A1", {1}, {1: 1}, 1)
    entries.append(entry([a1, a1], 0))
    # u(1, r) family; the rank-one instance carries h = (1,2,1)
    for r in range(1, max_rank + 1):
        entries.append(single(f"A{r}", {1}, {1: 1}, r, Fraction(1, r + 1)))
    entries.append(single("A1", {1}, {1: 2}, 1, 0))
    entries.append(single("A3", {2}, {2: 1}, 3, 0))
    return entries


def weight3_cy_horizontal(max_rank):
    entries = []
    a1 = factor("A1", {1}, {1: 1}, 1)
    entries.append(single("A1", {1}, {1: 3}, 1, 0))
    entries.append(entry([a1, a1, a1], 0))
    entries.append(single("A5", {3}, {3: 1}, 5, 0))
    for r in range(1, max_rank + 1):
        entries.append(single(f"A{r}", {1}, {1: 1}, r, Fraction(3, 2) - Fraction(r, r + 1)))
    for r in range(1, max_rank + 1):
        entries.append(single(f"A{r}", {1}, {1: 2}, r, Fraction(3, 2) - Fraction(2 * r, r + 1)))
    for r in range(2, max_rank + 1):
        entries.append(
            single(f"A{r}", {2}, {2: 1}, r, Fraction(3, 2) - Fraction(2 * (r - 1), r + 1)))
    for r in range(1, max_rank + 1):  # pairs of standard representations
        for rp in range(r, max_rank + 1):
            c = Fraction(3, 2) - Fraction(r, r + 1) - Fraction(rp, rp + 1)
            entries.append(entry(
                [factor(f"A{r}", {1}, {1: 1}, r), factor(f"A{rp}", {1}, {1: 1}, rp)], c))
    # sl(2) times any K3-type tuple
    for k3 in weight2_k3(max_rank):
        entries.append(entry([a1] + k3["factors"], Fraction(k3["c"])))
    entries.append(single("C3", {3}, {3: 1}, 3, 0))
    # so(m) quadric twists, including the so(3) and so(4) aliases
    entries.append(single("A1", {1}, {1: 2}, 1, Fraction(1, 2)))
    entries.append(entry([a1, a1], Fraction(1, 2)))
    entries.append(single("A3", {2}, {2: 1}, 3, Fraction(1, 2)))
    for m in range(5, 2 * max_rank + 2):
        name, r = so_algebra(m)
        if m % 2 == 0 and m < 8:
            continue
        if r > max_rank:
            continue
        entries.append(single(name, {1}, {1: 1}, r, Fraction(1, 2)))
    entries.append(single("D5", {5}, {5: 1}, 5, Fraction(1, 4)))
    entries.append(single("D6", {6}, {6: 1}, 6, 0))
    if max_rank >= 6:
        entries.append(single("E6", {6}, {6: 1}, 6, Fraction(1, 6)))
    if max_rank >= 7:
        entries.append(single("E7", {7}, {7: 1}, 7, 0))
    return entries


def weight1(max_rank):
    entries = []
    entries.append(single("A1", {1}, {1: 1}, 1, 0))  # sp(2)
    for r in range(3, max_rank + 1):
        entries.append(single(f"C{r}", {r}, {1: 1}, r, 0))
    for r in range(1, max_rank + 1):
        for i in range(1, r + 1):
            entries.append(
                single(f"A{r}", {1}, {i: 1}, r, Fraction(i, r + 1) - Fraction(1, 2)))
    for r in range(1, max_rank + 1):  # grassmannian form of the same family
        for a in range(1, r + 1):
            b = r + 1 - a
            entries.append(
                single(f"A{r}", {a}, {1: 1}, r, Fraction(1, 2) - Fraction(b, r + 1)))
    for r in range(2, max_rank + 1):  # so(2r+1) spin
        entries.append(single(f"B{r}", {1}, {r: 1}, r, 0))
    for r in range(4, max_rank + 1):  # so(2r) half-spin and so*(2r) standard
        entries.append(single(f"D{r}", {1}, {r: 1}, r, 0))
        entries.append(single(f"D{r}", {r}, {1: 1}, r, 0))
    return entries


def gradings():
    herm = []
    for r in range(1, 8):
        for a in range(1, r + 1):
            herm.append({"algebra": f"A{r}", "nodes": [a]})
    for r in range(2, 8):
        herm.append({"algebra": f"B{r}", "nodes": [1]})
    for r in range(3, 8):
        herm.append({"algebra": f"C{r}", "nodes": [r]})
    for r in range(4, 8):
        herm.append({"algebra": f"D{r}", "nodes": [1]})
        herm.append({"algebra": f"D{r}", "nodes": [r - 1]})
        herm.append({"algebra": f"D{r}", "nodes": [r]})
    herm.append({"algebra": "E6", "nodes": [1]})
    herm.append({"algebra": "E6", "nodes": [6]})
    herm.append({"algebra": "E7", "nodes": [7]})

    cont = []
    for r in range(2, 9):
        cont.append({"algebra": f"A{r}", "nodes": [1, r]})
    for r in range(2, 9):
        cont.append({"algebra": f"B{r}", "nodes": [2]})
    for r in range(3, 9):
        cont.append({"algebra": f"C{r}", "nodes": [1]})
    for r in range(4, 9):
        cont.append({"algebra": f"D{r}", "nodes": [2]})
    cont.append({"algebra": "E6", "nodes": [2]})
    cont.append({"algebra": "E7", "nodes": [1]})
    cont.append({"algebra": "E8", "nodes": [8]})
    cont.append({"algebra": "F4", "nodes": [1]})
    cont.append({"algebra": "G2", "nodes": [2]})
    return herm, cont


def write(name, payload):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        json.dump(payload, f, indent=1)
        f.write("\n")
    print(f"wrote {path}: {len(payload['entries'])} entries")


def main():
    os.makedirs(OUT, exist_ok=True)
    write("weight2_h1_horizontal.json",
          {"name": "weight 2, h = (1,h,1), horizontal, simple",
           "entries": weight2_h1_horizontal(6)})
    write("weight2_h2_horizontal.json",
          {"name": "weight 2, h = (2,h,2), horizontal, simple",
           "entries": weight2_h2_horizontal(6)})
    write("weight2_h2_nonhorizontal.json",
          {"name": "weight 2, h = (2,h,2), non-horizontal, simple",
           "entries": weight2_h2_nonhorizontal(6)})
    write("weight2_semisimple.json",
          {"name": "weight 2, semisimple non-simple",
           "entries": weight2_semisimple()})
    write("weight2_k3.json",
          {"name": "weight 2, h = (1,h,1): K3 type", "entries": weight2_k3(6)})
    write("weight3_cy_horizontal.json",
          {"name": "weight 3, CY type, horizontal",
           "entries": weight3_cy_horizontal(6)})
    write("weight1.json", {"name": "weight 1", "entries": weight1(4)})
    herm, cont = gradings()
    for name, rows in (("hermitian_gradings.json", herm), ("contact_gradings.json", cont)):
        path = os.path.join(OUT, name)
        with open(path, "w") as f:
            json.dump({"name": name.split(".")[0], "entries": rows}, f, indent=1)
            f.write("\n")
        print(f"wrote {path}: {len(rows)} entries")


if __name__ == "__main__":
    main()
