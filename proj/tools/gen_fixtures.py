#!/usr/bin/env python3
# Copyright 2026 The walshci Authors
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
"""Regenerates the FCIDUMP fixtures under data/fixtures with PySCF.

Only needed when changing geometries; the generated files are committed.
RHF canonical orbitals, STO-6G basis. Bond length (Angstrom) is encoded in
the file name since FCIDUMP carries no geometry.
"""
import argparse
import json
import math
import os

from pyscf import fci, gto, scf
from pyscf.tools import fcidump

H2_BONDS = [0.40, 0.55, 0.74, 0.90, 1.10, 1.30, 1.55, 1.80, 2.15, 2.50]


def write(mol, path, energies):
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    fcidump.from_scf(mf, path, tol=1e-14)
    solver = fci.FCI(mf)
    solver.conv_tol = 1e-12
    e_fci = solver.kernel()[0]
    energies[os.path.basename(path)] = {"rhf": mf.e_tot, "fci": e_fci}
    print(f"{path}: E(RHF) = {mf.e_tot:.10f}  E(FCI) = {e_fci:.10f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "fixtures"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    energies = {}

    for d in H2_BONDS:
        mol = gto.M(atom=[["H", (0, 0, 0)], ["H", (0, 0, d)]], basis="sto-6g", verbose=0)
        write(mol, os.path.join(args.out, f"h2_sto6g_{d:.3f}.fcidump"), energies)

    r, ang = 0.96, math.radians(104.3)
    mol = gto.M(atom=[["O", (0, 0, 0)], ["H", (r, 0, 0)],
                      ["H", (r * math.cos(ang), r * math.sin(ang), 0)]],
                basis="sto-6g", symmetry=False, verbose=0)
    write(mol, os.path.join(args.out, f"h2o_sto6g_{r:.3f}.fcidump"), energies)

    spacing = 1.0
    mol = gto.M(atom=[["H", (0, 0, i * spacing)] for i in range(6)], basis="sto-6g", verbose=0)
    write(mol, os.path.join(args.out, f"h6_sto6g_{spacing:.3f}.fcidump"), energies)

    with open(os.path.join(args.out, "reference_energies.json"), "w") as f:
        json.dump(energies, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
