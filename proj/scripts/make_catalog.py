#!/usr/bin/env python3
"""Writes data/catalog.json from the row list below and the permutation
realizations printed by realize_groups.py."""
import json
import pathlib
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent
out = subprocess.run([sys.executable, str(HERE / "realize_groups.py")], check=True,
                     capture_output=True, text=True).stdout
perm = dict(line.split(" ", 1) for line in out.strip().splitlines())

S4 = perm["24_12_pgl23"]
ROWS = [
    # genus, case, signature, group, names, id, reference, classes
    (2, 5, "0;2,2,2,2,2", "C2xC2", ["a", "b"], [4, 2], "SD(C2;[1])", None),
    (2, 11, "0;2,2,2,4", "D4", ["r", "s"], [8, 3], "SD(C4;[3])", None),
    (2, 14, "0;2,5,10", "C10", ["a"], [10, 2], "C2xC5", None),
    (2, 15, "0;2,2,2,3", "D6", ["r", "s"], [12, 4], "C2xD3", None),
    (2, 20, "0;2,4,6", perm["24_8_c6c2_c2"], None, [24, 8], "Perm[(1,2,3);(1,2)(4,5,6,7);(4,7)(5,6)]", None),
    (2, 21, "0;2,3,8", perm["48_29_natural"], None, [48, 29], perm["48_29_regular"], None),
    (3, 3, "1;2,2,2,2", "C2", ["a"], [2, 1], None, None),
    (3, 4, "0;2,2,2,2,2,2,2,2", "C2", ["a"], [2, 1], None, None),
    (3, 6, "0;3,3,3,3,3", "C3", ["a"], [3, 1], None, None),
    (3, 9, "0;2,2,2,2,2,2", "C2xC2", ["a", "b"], [4, 2], "SD(C2;[1])", None),
    (3, 10, "0;2,2,2,4,4", "C4", ["a"], [4, 1], None, None),
    (3, 13, "0;2,2,2,2,3", "D3", ["r", "s"], [6, 1], "SD(C3;[2])", None),
    (3, 14, "0;2,3,3,6", "C6", ["a"], [6, 2], "C2xC3", None),
    (3, 19, "0;2,2,2,2,2", "D4", ["r", "s"], [8, 3], "SD(C4;[3])", None),
    (3, 20, "0;2,2,2,2,2", "C2xC2xC2", ["x", "y", "z"], [8, 5], "SD(C2;[1,1])", None),
    (3, 21, "0;2,2,4,4", "C4xC2", ["a", "b"], [8, 2], "SD(C4;[1])", [["a^2", "b", "a", "ab"]]),
    (3, 24, "0;3,9,9", "C9", ["a"], [9, 1], None, None),
    (3, 26, "0;2,2,2,6", "D6", ["r", "s"], [12, 4], "C2xD3", None),
    (3, 30, "0;2,7,14", "C14", ["a"], [14, 2], "C2xC7", None),
    (3, 31, "0;2,2,2,4", "C2xD4", ["t", "r", "s"], [16, 11], "SD(C4;[3,1])", None),
    (3, 32, "0;2,2,2,4", perm["16_13_pauli"], None, [16, 13], perm["16_13_central_product"], None),
    (3, 38, "0;2,2,2,3", S4, None, [24, 12], "Perm[(1,2,3,4);(1,2)]", None),
    (3, 42, "0;2,4,12", "C4xD3", ["t", "r", "s"], [24, 5], "SD(C12;[5])", None),
    (3, 43, "0;2,4,8", perm["32_9"], ["x", "y", "z"], [32, 9], None, None),
    (3, 46, "0;2,4,6", "C2x" + S4, None, [48, 48],
     "Perm[(1,2,3,4)(5,6,7,8);(1,2)(5,6);(1,5)(2,6)(3,7)(4,8)]", None),
    (3, 47, "0;2,3,12", perm["48_33_f9"], None, [48, 33], perm["48_33_quotient"], None),
    (3, 48, "0;2,3,8", perm["96_64"], None, [96, 64], None, None),
    (3, 49, "0;2,3,7", perm["168_fano"], None, [168, 42], perm["168_gl32"], None),
]

entries = []
for genus, case, sig, group, names, gid, ref, classes in ROWS:
    e = {"genus": genus, "case": case, "signature": sig, "group": group, "id": gid}
    if names:
        e["names"] = names
    if ref:
        e["reference"] = ref
    if classes:
        e["classes"] = classes
    if case == 43:
        e["relations"] = ["x^8", "y^2", "z^2", "xyx^-1y^-1", "zyz^-1y^-1", "zxzxy"]
    entries.append(e)

doc = {"version": 1, "entries": entries}
path = HERE.parent / "data" / "catalog.json"
path.write_text(json.dumps(doc, indent=2) + "\n")
print(f"wrote {len(entries)} entries to {path}")
