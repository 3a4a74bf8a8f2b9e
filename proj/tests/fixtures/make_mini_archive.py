#!/usr/bin/env python3
# Copyright 2026 The Snipmine Authors.
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
"""Builds the mini web archive used by the end-to-end tests.

Every link on every page is designed to leave the anchor filter at a known
step (or survive it). The design is written down next to the archive:

  expected_outcomes.tsv   source doc, target url, anchor, reason per link
  expected_survivors.jsonl
  expected_stats.tsv      attrition table, deltas rounded half away from zero

Re-run after editing: python3 make_mini_archive.py [out_dir]
"""

import decimal
import gzip
import json
import os
import random
import re
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "..", "data")

WORD_RE = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)?")


def load_list(name):
    with open(os.path.join(DATA, name), encoding="utf-8") as f:
        return {l.strip() for l in f if l.strip() and not l.startswith("#")}


STOP = load_list("stop_words.txt")
VERBS = load_list("verbs.txt")


def words(text):
    return WORD_RE.findall(text)


def stop_ratio(text):
    w = words(text)
    return sum(1 for t in w if t.lower() in STOP) / len(w)


NOUNS = ["harbor", "village", "museum", "library", "garden", "bridge",
         "festival", "orchard", "bakery", "railway", "school", "theater",
         "river", "valley", "castle", "island", "lighthouse", "vineyard",
         "workshop", "chapel", "meadow", "fountain", "tower", "cottage",
         "square", "lake", "forest", "abbey", "mill", "pier"]
ADJS = ["old", "quiet", "small", "northern", "ancient", "famous", "local",
        "narrow", "bright", "southern", "large", "green", "wooden", "early"]
VERBS_PAST = ["visited", "built", "opened", "described", "painted", "crossed",
              "followed", "repaired", "welcomed", "admired", "explored"]
PEOPLE = ["The mayor", "A teacher", "The keeper", "Local families",
          "Two painters", "The council", "Young students", "A historian",
          "The baker", "Visiting sailors", "The gardener", "An architect"]
SEASONS = ["spring", "summer", "autumn", "winter"]


class Prose:
    """Deterministic English sentences with a verb and function words."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def sentence(self):
        r = self.rng
        n1, n2, n3 = r.sample(NOUNS, 3)
        a1, a2 = r.sample(ADJS, 2)
        who = r.choice(PEOPLE)
        verb = r.choice(VERBS_PAST)
        season = r.choice(SEASONS)
        form = r.randrange(4)
        if form == 0:
            return (f"{who} {verb} the {a1} {n1} near the {n2} during the "
                    f"{season} of {r.randrange(1890, 2010)}.")
        if form == 1:
            return (f"In the {season} the {a1} {n1} was {verb} by people from "
                    f"the {a2} {n2} and the {n3}.")
        if form == 2:
            return (f"Many of the visitors {verb} the {n1} because it stands "
                    f"close to the {a1} {n2} on the edge of the {n3}.")
        return (f"{who} {verb} a {a1} {n1} with a view of the {n2} and "
                f"wrote about the {a2} {n3} in a letter.")

    def sentences(self, count):
        return " ".join(self.sentence() for _ in range(count))

    def paragraph(self, min_chars=450):
        out = self.sentence()
        while len(out) < min_chars:
            out += " " + self.sentence()
        return out


GERMAN = (
    "Der alte Hafen der Stadt ist nicht nur ein Ort der Arbeit, sondern auch "
    "ein Ort der Ruhe. Die Fischer kommen am Morgen zurück und die "
    "Besucher sehen ihnen zu. Im Sommer gibt es auf dem Platz vor der Kirche "
    "einen kleinen Markt, auf dem die Bauern aus dem Umland ihr Obst und ihr "
    "Gemüse verkaufen. Wer mehr über die Geschichte der Stadt "
    "erfahren will, sollte das Museum am Rathaus besuchen, das jeden Tag "
    "geöffnet ist und eine große Sammlung von alten Karten und "
    "Bildern zeigt. Die Straßen sind eng und die Häuser sind alt, "
    "aber die Menschen sind freundlich und helfen gern.")

# Mostly stop words; "walked" keeps a verb in it.
HIGH_STOP = (
    "It was there that we walked with them, and it was then that they had "
    "all of it for us. We were there for the {a} and it was all that we had "
    "then. So it is what it is, and we are here for you and for them, as we "
    "have been before and as we will be again, if that is what you want to do "
    "with it now.")

# Almost no stop words.
LOW_STOP = (
    "Harbor towns offer fresh seafood, bright markets, quiet beaches, "
    "historic lighthouses, scenic cliffs, painted cottages, wooden piers, "
    "sailing clubs, bakeries, galleries, chapels, gardens, museums, orchards, "
    "vineyards, meadows, ferries, lanterns, mosaics, fountains, towers, "
    "courtyards, terraces, bookshops, cafes, workshops plus the {a}, "
    "tidepools, dunes, coves, lagoons, marinas, boardwalks, promenades, "
    "carousels, kites, sandcastles, seashells, driftwood, sunsets.")

# No token is a verb form or ends in -ed/-ing.
NO_VERB = (
    "A list of the old harbor towns of the northern coast, with the quiet "
    "island ports, the small museums, the narrow lanes and the ancient "
    "castles of the region. A second list of the {a} and the green hills, "
    "the deep lakes, the wide rivers and the tall towers of the valley towns. "
    "The small chapels of the south, the old orchards and the quiet meadows "
    "of the island farms.")


class Archive:
    def __init__(self):
        self.pages = []  # dicts: url, html, doc_id, language, status

    def add(self, url, html, language=None, status=200):
        doc_id = "mini-%04d" % (len(self.pages) + 1)
        self.pages.append(dict(url=url, html=html, doc_id=doc_id,
                               language=language, status=status))
        return doc_id

    def records(self):
        yield warc_record("warcinfo", {"WARC-Filename": "mini.warc"},
                          b"software: make_mini_archive.py\r\n")
        for i, page in enumerate(self.pages):
            body = page["html"].encode("utf-8")
            reason = {200: "OK", 404: "Not Found"}[page["status"]]
            http = (f"HTTP/1.1 {page['status']} {reason}\r\n"
                    f"Content-Type: text/html; charset=utf-8\r\n"
                    f"Content-Length: {len(body)}\r\n\r\n").encode() + body
            headers = {
                "WARC-Target-URI": page["url"],
                "WARC-TREC-ID": page["doc_id"],
                "WARC-Record-ID": "<urn:uuid:00000000-0000-0000-0000-%012d>" % i,
                "Content-Type": "application/http; msgtype=response",
            }
            if page["language"]:
                headers["WARC-Identified-Content-Language"] = page["language"]
            yield warc_record("response", headers, http)


def warc_record(kind, headers, payload):
    lines = ["WARC/1.0", f"WARC-Type: {kind}",
             "WARC-Date: 2012-02-10T22:50:01Z"]
    lines += [f"{k}: {v}" for k, v in headers.items()]
    lines.append(f"Content-Length: {len(payload)}")
    return ("\r\n".join(lines) + "\r\n\r\n").encode() + payload + b"\r\n\r\n"


def page_html(title, paragraphs):
    body = "\n".join(f"<p>{p}</p>" for p in paragraphs)
    return (f"<!DOCTYPE html>\n<html><head><title>{title}</title></head>\n"
            f"<body>\n{body}\n</body></html>\n")


def link(href, text):
    return f'<a href="{href}">{text}</a>'


def strip_tags(html):
    return re.sub(r"<[^>]+>", "", html)


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        HERE, "mini_archive")
    os.makedirs(out_dir, exist_ok=True)
    archive = Archive()
    spam = {}
    judged = []
    links = []  # (source_doc_id, target_url, anchor, reason, context)
    seed = [0]

    def prose():
        seed[0] += 1
        return Prose(seed[0])

    def target(name, paragraphs=3, language=None, text=None, percentile=85):
        url = f"http://www.{name}.com/index.html"
        if text is None:
            p = prose()
            text = [p.paragraph() for _ in range(paragraphs)]
        doc_id = archive.add(url, page_html(name, text), language=language)
        spam[doc_id] = percentile
        return url, doc_id

    def source(name, before, anchor_html, after, reason, anchor_text=None):
        """One-paragraph page; the context is the whole paragraph."""
        url = f"http://www.{name}.org/notes.html"
        para = f"{before} {anchor_html} {after}".strip()
        doc_id = archive.add(url, page_html(name, [para]))
        spam[doc_id] = 85
        context = strip_tags(para)
        for href, inner in re.findall(r'<a href="([^"]+)">(.*?)</a>', para):
            links.append((doc_id, href, strip_tags(inner), reason, context))
        return doc_id, context

    def anchor_sentence(p, href, anchor):
        n1, n2 = p.rng.sample(NOUNS, 2)
        return (f"Readers who {p.rng.choice(VERBS_PAST)} the {n1} often "
                f"recommended {link(href, anchor)} for the history of the "
                f"{n2}.")

    def normal_source(name, href, anchor, reason):
        p = prose()
        return source(name, p.sentences(4), anchor_sentence(p, href, anchor),
                      p.sentences(4), reason)

    common_url, _ = target("harbor-almanac")

    # 1. Intra-site links: same registrable domain as the source.
    normal_source("river-diary", "http://blog.river-diary.org/archive.html",
                  "river archive", "intra-site")
    normal_source("valley-notes", "http://www.valley-notes.org/about.html",
                  "about the valley", "intra-site")

    # 2. Pages missing from the archive; one exists only as a 404.
    missing_404 = "http://www.lost-records.com/index.html"
    archive.add(missing_404, page_html("gone", ["Not found."]), status=404)
    normal_source("castle-letters", "http://www.nowhere-press.com/index.html",
                  "castle press", "target-unavailable")
    normal_source("orchard-log", missing_404, "orchard records",
                  "target-unavailable")

    # 3. Non-English targets: one by metadata, one by content.
    de1_url, _ = target("hafen-zeitung", language="deu",
                        text=[GERMAN, GERMAN.replace("alte", "neue")])
    de2_url, _ = target("stadt-chronik", text=[GERMAN])
    normal_source("ferry-journal", de1_url, "harbor newspaper", "non-english")
    normal_source("island-post", de2_url, "town chronicle", "non-english")

    # 4. Spam targets (below the 70th percentile, not judged).
    spam1_url, _ = target("cheap-lighthouse-deals", percentile=69)
    spam2_url, _ = target("best-garden-offers", percentile=15)
    normal_source("garden-diary", spam1_url, "lighthouse deals", "spam")
    normal_source("mill-notes", spam2_url, "garden offers", "spam")

    # 5. Stop anchors.
    normal_source("tower-blog", common_url, "click here", "stop-anchor-word")
    normal_source("abbey-news", common_url, "Read more", "stop-anchor-word")
    p = prose()
    source("meadow-notes", p.sentences(4),
           f'<a href="{common_url}"><img src="almanac.png"></a> '
           + anchor_sentence(p, common_url, "harbor almanac").replace(
               f'<a href="{common_url}">harbor almanac</a>', "the almanac"),
           p.sentences(4), "empty-anchor")
    p = prose()
    source("pier-weekly", p.sentences(4),
           f"Two guides are listed: {link(common_url, 'harbor almanac')} and "
           f"{link(common_url, 'the almanac')} for the northern coast.",
           p.sentences(4), "multi-link")

    # 6. Improper text.
    normal_source("bridge-journal", common_url,
                  "the complete and illustrated almanac of the harbor towns "
                  "of the north", "anchor-too-long")
    p = prose()
    source("lake-notes", "", anchor_sentence(p, common_url, "harbor almanac"),
           p.sentences(1), "context-too-short")
    p = prose()
    source("forest-diary", p.sentences(4),
           f"See the {link(common_url, 'harbor almanac')} today.",
           p.sentences(4), "sentence-too-short")
    source("chapel-lists", "", NO_VERB.format(
        a=link(common_url, "harbor almanac")), "", "no-verb")
    source("square-talk", "", HIGH_STOP.format(
        a=link(common_url, "harbor almanac")), "", "stopword-ratio")
    source("dune-catalog", "", LOW_STOP.format(
        a=link(common_url, "harbor almanac")), "", "stopword-ratio")

    # 7. The same context three times (one copy with a word changed), all
    # linking one target. The lowest source doc id survives.
    dup_url, _ = target("vineyard-guide")
    p = prose()
    before, after = p.sentences(4), p.sentences(4)
    middle = anchor_sentence(p, dup_url, "vineyard guide")
    source("wine-notes", before, middle, after, "kept")
    source("wine-mirror", before, middle, after, "near-duplicate")
    source("wine-copy", before.replace("the ", "a ", 1), middle, after,
           "near-duplicate")

    # 8. The context appears verbatim in the target page.
    for name, tname in (("bakery-stories", "bakery-review"),
                        ("theater-stories", "theater-review")):
        p = prose()
        t_url = f"http://www.{tname}.com/index.html"
        before, after = p.sentences(4), p.sentences(4)
        middle = anchor_sentence(p, t_url, tname.replace("-", " "))
        quoted = strip_tags(f"{before} {middle} {after}")
        q = prose()
        target(tname, text=[q.paragraph(), quoted, q.paragraph()])
        source(name, before, middle, after, "text-reuse")

    # 9. Short targets: one paragraph of about 80 words.
    for name, tname in (("school-notes", "school-page"),
                        ("railway-notes", "railway-page")):
        p = prose()
        para = p.sentence()
        while len(words(para)) < 75 or len(para) < 420:
            para += " " + p.sentence()
        assert len(words(para)) < 100, name
        t_url, _ = target(tname, text=[para])
        normal_source(name, t_url, tname.replace("-", " "), "short-page")

    # Survivors: ordinary links, plus a low-spam target rescued by a judgment.
    for i, name in enumerate(("museum-walks", "festival-diary",
                              "lighthouse-letters")):
        t_url, _ = target(f"{name}-home")
        normal_source(name, t_url, name.replace("-", " ") + " home", "kept")
    judged_url, judged_id = target("fountain-society", percentile=40)
    judged.append(judged_id)
    normal_source("fountain-friends", judged_url, "fountain society", "kept")

    # Unlinked pages.
    for name in ("cottage-register", "tower-register", "lake-register",
                 "mill-register", "pier-register"):
        target(name)

    # Design checks, independent of the library.
    for doc_id, href, anchor, reason, context in links:
        n = len(words(context))
        if reason in ("kept", "near-duplicate", "text-reuse", "short-page"):
            assert n >= 50, (doc_id, n)
            assert 0.10 <= stop_ratio(context) <= 0.70, doc_id
    by_reason = {r: [l for l in links if l[3] == r] for _, _, _, r, _ in links}
    ctx = by_reason["no-verb"][0][4]
    assert len(words(ctx)) >= 50
    assert 0.10 <= stop_ratio(ctx) <= 0.70, stop_ratio(ctx)
    for w in words(ctx):
        assert w.lower() not in VERBS and not w.endswith(("ed", "ing")), w
    ratios = sorted(stop_ratio(l[4]) for l in by_reason["stopword-ratio"])
    assert ratios[0] < 0.10 and ratios[1] > 0.70, ratios
    assert all(len(words(l[4])) >= 50 for l in by_reason["stopword-ratio"])
    assert len(words(by_reason["context-too-short"][0][4])) < 50
    assert len(archive.pages) >= 45 and len(links) >= 28

    with open(os.path.join(out_dir, "mini.warc"), "wb") as f:
        for rec in archive.records():
            f.write(rec)
    with open(os.path.join(out_dir, "mini.warc.gz"), "wb") as f:
        for rec in archive.records():
            f.write(gzip.compress(rec, mtime=0))
    with open(os.path.join(out_dir, "spam.tsv"), "w") as f:
        for doc_id in sorted(spam):
            f.write(f"{doc_id}\t{spam[doc_id]}\n")
    with open(os.path.join(out_dir, "qrels.txt"), "w") as f:
        for doc_id in judged:
            f.write(f"201 0 {doc_id} 1\n")

    url_to_doc = {p["url"]: p["doc_id"] for p in archive.pages
                  if p["status"] == 200}
    with open(os.path.join(out_dir, "expected_outcomes.tsv"), "w") as f:
        f.write("source_doc_id\ttarget_url\tanchor_text\treason\n")
        for doc_id, href, anchor, reason, _ in links:
            f.write(f"{doc_id}\t{href}\t{anchor}\t{reason}\n")
    with open(os.path.join(out_dir, "expected_survivors.jsonl"), "w") as f:
        for doc_id, href, anchor, reason, context in sorted(links):
            if reason == "kept":
                f.write(json.dumps({"source_doc_id": doc_id,
                                    "target_url": href,
                                    "target_doc_id": url_to_doc[href],
                                    "anchor_text": anchor,
                                    "context": context},
                                   sort_keys=True) + "\n")

    steps = [
        ("1. Intra-site links", {"intra-site", "invalid-url", "missing-source"}),
        ("2. Non-existing pages", {"target-unavailable"}),
        ("3. Non-English pages", {"non-english"}),
        ("4. Spam anchors", {"spam"}),
        ("5. Stop anchors", {"empty-anchor", "stop-anchor-word", "multi-link"}),
        ("6. Improper text", {"anchor-too-long", "context-too-short",
                              "sentence-too-short", "no-verb",
                              "stopword-ratio"}),
        ("7. Duplicated", {"near-duplicate"}),
        ("8. Text reuse", {"text-reuse"}),
        ("9. Short web pages", {"short-page"}),
    ]
    with open(os.path.join(out_dir, "expected_stats.tsv"), "w") as f:
        f.write("step\tremaining\tdelta\n")
        remaining = len(links)
        f.write(f"Raw anchor contexts\t{remaining}\t\n")
        for name, reasons in steps:
            dropped = sum(1 for l in links if l[3] in reasons)
            assert dropped >= 2, name
            previous, remaining = remaining, remaining - dropped
            pct = decimal.Decimal(-100 * (previous - remaining)) / previous
            pct = pct.quantize(decimal.Decimal("0.1"),
                               rounding=decimal.ROUND_HALF_UP)
            f.write(f"{name}\t{remaining}\t-{abs(pct)}%\n")

    print(f"{len(archive.pages)} pages, {len(links)} links -> {out_dir}")


if __name__ == "__main__":
    main()
