#!/usr/bin/env python3
"""Independent recount of the mini fixture.

Reimplements tokenization, normalization, the blacklist/threshold pipeline,
synonym election and presence scanning with plain Python so the C++ tests can
freeze the numbers printed here. Run: python3 tests/oracle/mini_oracle.py
"""
import json
import re
import sys
from collections import defaultdict
from pathlib import Path

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def tokenize(text):
    return [t for t in re.split(r"[^0-9a-z]+", text.casefold()) if t]


def normalize(tag):
    return re.sub(r"[\s\-_]+", " ", tag.casefold()).strip()


def load(name):
    return [json.loads(l) for l in (FIX / name).read_text().splitlines() if l.strip()]


def contiguous(needle, hay):
    n = len(needle)
    return n > 0 and any(hay[i:i + n] == needle for i in range(len(hay) - n + 1))


def pipeline(articles, tags, relations, min_users, blacklist=("wikipedia", "reference", "wiki")):
    ids = {a["id"] for a in articles}
    raw = [t for t in tags if t["article"] in ids]
    bl = {normalize(b) for b in blacklist}
    kept = [t for t in raw if normalize(t["tag"]) not in bl]
    users = defaultdict(set)
    for t in kept:
        users[t["article"]].add(t["user"])
    after_bl = len(kept)
    kept = [t for t in kept if len(users[t["article"]]) >= min_users]

    # union-find by brute force: merge classes until stable
    cls = {}
    for a, b in relations:
        ca, cb = cls.get(a, {a}), cls.get(b, {b})
        merged = ca | cb
        for m in merged:
            cls[m] = merged
    usage = defaultdict(int)
    for t in kept:
        usage[normalize(t["tag"])] += 1

    def canonical(tag):
        members = cls.get(tag, {tag})
        return sorted(members, key=lambda m: (-usage[m], m))[0]

    lists = defaultdict(lambda: defaultdict(set))
    for t in kept:
        lists[t["article"]][canonical(normalize(t["tag"]))].add(t["user"])
    dedup = {(t["user"], t["article"], canonical(normalize(t["tag"]))) for t in kept}
    weights = {a: {t: len(u) for t, u in d.items()} for a, d in lists.items()}
    distinct = {t for d in weights.values() for t in d}
    report = dict(raw=len(raw), after_blacklist=after_bl, after_threshold=len(kept),
                  deduplicated=len(dedup), tagged_articles=len(weights), distinct_tags=len(distinct))
    return report, weights


def presence(articles, weights):
    by_id = {a["id"]: a for a in articles}
    per_article = []
    for aid in sorted(weights):
        a = by_id[aid]
        title, content = tokenize(a["title"]), tokenize(a["content"])
        cats = [tokenize(c) for c in a["categories"]]
        row = dict(count=len(weights[aid]), doc=0, content=0, cat=0)
        for tag in weights[aid]:
            needle = tokenize(tag)
            c = contiguous(needle, content)
            k = any(contiguous(needle, x) for x in cats)
            t = contiguous(needle, title)
            row["content"] += c
            row["cat"] += k
            row["doc"] += (c or k or t)
        per_article.append(row)
    return per_article


def pct(found, total):
    return (20000 * found + total) // (2 * total) / 100


def main():
    articles = load("mini.jsonl")
    tags = load("mini-tags.jsonl")
    relations = [tuple(normalize(s) for s in l.split(" = "))
                 for l in (FIX / "mini-relations.txt").read_text().splitlines()
                 if l.strip() and not l.startswith("#")]
    ids = {a["id"] for a in articles}
    print("articles", len(articles))
    print("assignments", len(tags))
    print("dangling_links", sum(1 for a in articles for l in a["links"] if l not in ids))
    users = defaultdict(set)
    for t in tags:
        users[t["article"]].add(t["user"])
    print("annotators_raw", {k: len(v) for k, v in sorted(users.items())})
    stat_laws = sorted(a["id"] for a in articles
                       if any(c.strip().casefold() == "statistical laws" for c in a["categories"]))
    print("category 'statistical laws'", stat_laws)

    for k in (10, 2):
        report, weights = pipeline(articles, tags, relations, k)
        print(f"--- min_users={k}")
        print("report", report)
        for aid in sorted(weights):
            print(" ", aid, dict(sorted(weights[aid].items())))
        rows = presence(articles, weights)
        total = sum(r["count"] for r in rows)
        for key in ("doc", "content", "cat"):
            f = sum(r[key] for r in rows)
            print(f"  presence {key}: found={f} not_found={total - f}"
                  + (f" pct={pct(f, total):.2f}" if total else ""))
        groups = defaultdict(list)
        for r in rows:
            groups[r["count"]].append(r)
        for n in sorted(groups):
            g = groups[n]
            p = sum(r["count"] for r in g)
            print(f"  curve {n}: articles={len(g)} pairs={p} "
                  + " ".join(f"{key}={pct(sum(r[key] for r in g), p):.2f}" for key in ("doc", "content", "cat")))
    return 0


if __name__ == "__main__":
    sys.exit(main())
