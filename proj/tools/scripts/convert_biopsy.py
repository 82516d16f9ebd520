"""Convert the MASS `biopsy` table into the loader's in_*/out_0 CSV layout.

Usage: python convert_biopsy.py biopsy.csv data/cancer.csv

The nine cytology scores become in_0..in_8, the class becomes out_0
(malignant = 1, benign = 0). Missing cells stay empty so the loader drops
those rows.
"""

import csv
import sys


def main(src: str, dst: str) -> None:
    with open(src, newline="") as fin, open(dst, "w", newline="") as fout:
        reader = csv.DictReader(fin)
        writer = csv.writer(fout, lineterminator="\n")
        writer.writerow([f"in_{i}" for i in range(9)] + ["out_0"])
        for row in reader:
            cells = ["" if row[f"V{i}"] == "NA" else row[f"V{i}"] for i in range(1, 10)]
            label = {"malignant": "1", "benign": "0"}[row["class"]]
            writer.writerow(cells + [label])


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
