"""Regenerate the fixture corpus under fixtures/ from library constructors.

Idempotent: the emitters are canonical, so re-running produces
byte-identical files.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from monocentre.fincat import walking_arrow
from monocentre.jsonio import (
    category_to_doc,
    cocycle_to_doc,
    group_to_doc,
    monoidal_to_doc,
    write_spec,
)
from monocentre.monoidal import (
    S3,
    Z2,
    Z3,
    Z4,
    chain_poset_monoidal,
    discrete_group_monoidal,
    one_object_z2_monoidal,
)
from monocentre.veck import Cocycle3, trivial_cocycle, z2_nontrivial_cocycle


def main():
    root = pathlib.Path(__file__).resolve().parents[1] / "fixtures"
    root.mkdir(exist_ok=True)

    tables = {"z2": Z2, "z3": Z3, "z4": Z4, "s3": S3}
    docs = {}
    for name, table in tables.items():
        docs[f"{name}_discrete.json"] = monoidal_to_doc(
            discrete_group_monoidal(table))
        docs[f"{name}.json"] = group_to_doc(table)
    docs["poset.json"] = monoidal_to_doc(chain_poset_monoidal(2))
    docs["walking_arrow.json"] = category_to_doc(walking_arrow())
    docs["broken_pentagon.json"] = monoidal_to_doc(
        one_object_z2_monoidal(broken_pentagon=True))
    docs["z2_trivial.json"] = cocycle_to_doc(trivial_cocycle(Z2, 2))
    docs["z2_nontrivial.json"] = cocycle_to_doc(z2_nontrivial_cocycle())
    broken = [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]
    docs["z2_broken_omega.json"] = cocycle_to_doc(Cocycle3(Z2, 2, broken))

    for name in sorted(docs):
        write_spec(str(root / name), docs[name])
        print(f"wrote fixtures/{name}")


if __name__ == "__main__":
    main()
