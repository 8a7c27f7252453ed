#!/usr/bin/env python3
"""Optional patent-claims fetcher: claims text -> one sentence per line.

`barcode mine-patents` consumes a plain-text file (or stdin) with one
claim sentence per line; claims sections are where patents state what
they are for, which is what the "for [verb]-ing [noun]" extraction rule
targets:

    A surface cleaning apparatus comprising a second collecting
    apparatus for collecting liquid from the surface.

Any bulk patent source works (e.g. weekly full-text archives or a
claims dump); split documents into claim sentences, strip claim
numbering, and write one sentence per line. The mining itself does not
care which office or era the patents come from — a large random set is
the point. fixtures/patents/claims.txt shows the expected shape at toy
scale.
"""

import sys

if __name__ == "__main__":
    sys.exit(
        "fetch_patent_claims.py is a format stub; see the module docstring "
        "for the expected claims.txt shape."
    )
