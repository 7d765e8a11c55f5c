"""The same pipeline through the command line interface.

Each step below mirrors a shell command; the script drives the entry point
directly so it can run anywhere the package is installed:

    ssph train   --data train.txt --out models.txt --window 2 --iters 10
    ssph predict --models models.txt --fasta test.fa --out pred.txt --window 2
    ssph eval    --pred pred.txt --truth truth.txt --window 2 --csv report.csv
"""

import tempfile
from pathlib import Path

from ssph import (FastaRecord, format_fasta, format_label_records,
                  format_labeled_dataset, planted_dataset)
from ssph.cli import main

chains = planted_dataset(num_chains=60, length=60, seed=9, stay=0.9)
train, test = chains[:50], chains[50:]

with tempfile.TemporaryDirectory() as workdir:
    work = Path(workdir)
    (work / "train.txt").write_text(format_labeled_dataset(train),
                                    encoding="utf-8")
    (work / "test.fa").write_text(format_fasta(
        [FastaRecord(r.id, r.sequence) for r in test]), encoding="utf-8")
    (work / "truth.txt").write_text(format_label_records(
        [(r.id, r.labels) for r in test]), encoding="utf-8")

    print("== ssph train ==")
    code = main(["train", "--data", str(work / "train.txt"),
                 "--out", str(work / "models.txt"),
                 "--window", "2", "--iters", "10", "--seed", "0"])
    assert code == 0

    print("\n== ssph predict ==")
    code = main(["predict", "--models", str(work / "models.txt"),
                 "--fasta", str(work / "test.fa"),
                 "--out", str(work / "pred.txt"), "--window", "2"])
    assert code == 0
    preview = (work / "pred.txt").read_text(encoding="utf-8").splitlines()[:4]
    print("\n".join(preview))

    print("\n== ssph eval ==")
    code = main(["eval", "--pred", str(work / "pred.txt"),
                 "--truth", str(work / "truth.txt"), "--window", "2",
                 "--csv", str(work / "report.csv")])
    assert code == 0

    print("\n== report.csv ==")
    print((work / "report.csv").read_text(encoding="utf-8"), end="")
