"""Write the synthetic breast and lung peptide corpora as CSV files.

Run:  python3 demos/make_corpora.py [out_dir]
Produces breast.csv (949 rows) and lung.csv (901 rows) with the
sequence,label schema the dataset subcommand ingests.
"""

import sys

from hilbertseq.synthetic import CORPORA, write_corpus_csv

out_dir = sys.argv[1] if len(sys.argv) > 1 else "."

for name in sorted(CORPORA):
    path = f"{out_dir}/{name}.csv"
    rows = write_corpus_csv(name, path)
    print(f"{path}: {rows} rows")
