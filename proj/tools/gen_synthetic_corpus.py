#!/usr/bin/env python3
"""Generates the 200-document retrieval-quality corpus under data/synthetic/.

50 documents are relevant to the query concept "loan": 15 say "loan", the
other 35 only use a synonym ("credit", "lending") or a narrower term
("mortgage"). 150 documents cover unrelated topics; 5 of those mention
"credit" in an unrelated sense. Output is deterministic.

Usage: python3 tools/gen_synthetic_corpus.py [out_dir]
"""
import json
import os
import random
import sys

SOURCES = ["Financial Daily", "Market Wire", "Banking Times", "Economy Today"]

FILLER = ("officials reported steady figures while analysts watched regional "
          "markets customers branches quarter policy review growth outlook").split()

TOPICS = {
    "deposit": "deposit saving account interest balance branch".split(),
    "weather": "monsoon rainfall forecast farm harvest season".split(),
    "sport": "cricket match team score tournament player".split(),
    "tech": "software network startup device platform cloud".split(),
    "trade": "export import tariff shipment port cargo".split(),
}

SYNONYM_TERMS = ["credit", "lending", "mortgage"]


def sentence(rng, words, n):
    return " ".join(rng.choice(words) for _ in range(n))


def main(out_dir):
    rng = random.Random(20100301)
    os.makedirs(out_dir, exist_ok=True)
    docs, relevant = [], []

    def add(title, body):
        i = len(docs) + 1
        doc_id = f"s{i:03d}"
        docs.append({
            "id": doc_id,
            "source": rng.choice(SOURCES),
            "published_at": f"2010-{1 + i % 12:02d}-{1 + i % 28:02d}T08:00:00Z",
            "title": title,
            "body": body,
        })
        return doc_id

    for k in range(50):
        if k < 15:
            term = "loan"
        else:
            term = SYNONYM_TERMS[k % len(SYNONYM_TERMS)]
        title = f"{term} demand {sentence(rng, FILLER, 3)}"
        body = f"{sentence(rng, FILLER, 6)} {term} applications {sentence(rng, FILLER, 5)}"
        relevant.append(add(title, body))

    topics = sorted(TOPICS)
    for k in range(150):
        words = TOPICS[topics[k % len(topics)]]
        title = sentence(rng, words, 4)
        body = f"{sentence(rng, words, 5)} {sentence(rng, FILLER, 6)}"
        if k < 5:
            body += " shoppers earned store credit"
        add(title, body)

    order = list(range(len(docs)))
    rng.shuffle(order)
    with open(os.path.join(out_dir, "corpus.jsonl"), "w") as fh:
        for i in order:
            fh.write(json.dumps(docs[i], separators=(",", ":")) + "\n")

    ontology = {
        "name": "finance",
        "concepts": [
            {"name": "finance", "parent": None, "weight": 1.0},
            {"name": "loan", "parent": "finance", "weight": 0.9},
            {"name": "mortgage", "parent": "loan", "weight": 0.8},
            {"name": "deposit", "parent": "finance", "weight": 0.9},
            {"name": "trade", "parent": None, "weight": None},
        ],
    }
    with open(os.path.join(out_dir, "ontology.json"), "w") as fh:
        json.dump(ontology, fh, indent=2)
        fh.write("\n")

    with open(os.path.join(out_dir, "lexicon.tsv"), "w") as fh:
        fh.write("loan\tSYNONYM\tcredit\n")
        fh.write("loan\tSYNONYM\tlending\n")
        fh.write("loan\tHYPONYM\tmortgage\n")
        fh.write("deposit\tSYNONYM\tsaving\n")
        fh.write("trade\tHYPONYM\texport\n")

    with open(os.path.join(out_dir, "queries.txt"), "w") as fh:
        fh.write("loan\n")

    with open(os.path.join(out_dir, "qrels.tsv"), "w") as fh:
        for doc_id in sorted(relevant):
            fh.write(f"loan\t{doc_id}\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else os.path.join("data", "synthetic"))
