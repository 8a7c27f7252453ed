#!/usr/bin/env python3
"""Optional corpus fetcher: species articles -> articles.jsonl.

The engine is corpus-agnostic; it only consumes the JSONL article
format, one object per line:

    {"article_id": "stenocara",             # stable, unique
     "title": "Stenocara gracilipes",
     "organism": "Stenocara gracilipes",    # defaults to title downstream
     "source_url": "https://en.wikipedia.org/wiki/Stenocara_gracilipes",
     "text": "Plain text, markup stripped."}

A production fetch walks a category listing of species articles (the
"species microformat" category is a good seed set), pulls plain-text
extracts via the public API, and writes one line per article:

    https://en.wikipedia.org/w/api.php?action=query
        &generator=categorymembers&gcmtitle=Category:<...>
        &prop=extracts&explaintext=1&format=json

Network access and rate limiting are deployment concerns, so this repo
ships the format contract (above) plus the fixture corpus rather than a
scraper; wire up your HTTP client of choice below if you need a live
pull.
"""

import sys

if __name__ == "__main__":
    sys.exit(
        "fetch_wikipedia.py is a format stub; see the module docstring for "
        "the expected articles.jsonl shape."
    )
