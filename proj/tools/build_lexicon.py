#!/usr/bin/env python3
# Copyright 2026 The Lipogram Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds data/lexicon.tsv and data/dictionary.txt.

Reads a WordNet 3.x dictionary directory (index.*, data.*, *.exc) and the
wordfreq English frequency list. Each lexicon row is
`word<TAB>lemma<TAB>syn1,syn2,...<TAB>frequency`, where `word` is a surface
form, `lemma` its WordNet base form and the synonyms are drawn from the
lemma's synsets (first matching part of speech), adjective similar-to
links and direct hypernyms.

    pip install wordfreq
    python3 tools/build_lexicon.py --wordnet /path/to/wordnet-3.x --out data
"""

import argparse
import os
import re

import wordfreq

POS = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}
# Morphological detachment rules used by WordNet's morphy.
SUFFIXES = {
    "n": [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"),
          ("shes", "sh"), ("men", "man"), ("ies", "y")],
    "v": [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
          ("ed", ""), ("ing", "e"), ("ing", "")],
    "a": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "r": [],
}
SYNONYM_RE = re.compile(r"^[a-z][a-z.'-]*$")
MAX_SYNONYMS = 24


def read_index(root, pos):
    index = {}
    with open(os.path.join(root, "index." + POS[pos]), encoding="utf-8") as f:
        for line in f:
            if line.startswith(" ") or not line.strip():
                continue
            parts = line.split()
            lemma, n_synsets, n_ptrs = parts[0], int(parts[2]), int(parts[3])
            offsets = parts[6 + n_ptrs:6 + n_ptrs + n_synsets]
            index[lemma] = offsets
    return index


def read_data(root, pos):
    data = {}
    with open(os.path.join(root, "data." + POS[pos]), encoding="utf-8") as f:
        for line in f:
            if not line[:1].isdigit():
                continue
            body = line.split("|")[0].split()
            offset, n_words = body[0], int(body[3], 16)
            words = [body[4 + 2 * i].lower() for i in range(n_words)]
            words = [re.sub(r"\(.*\)$", "", w) for w in words]
            k = 4 + 2 * n_words
            n_ptrs = int(body[k])
            related = []
            for i in range(n_ptrs):
                symbol, target, target_pos = body[k + 1 + 4 * i: k + 4 + 4 * i]
                if symbol in ("@", "&"):
                    related.append((target_pos.replace("s", "a"), target))
            data[offset] = (words, related)
    return data


def read_exceptions(root, pos):
    exc = {}
    with open(os.path.join(root, POS[pos] + ".exc"), encoding="utf-8") as f:
        for line in f:
            parts = line.split()
            if len(parts) >= 2:
                exc.setdefault(parts[0], parts[1])
    return exc


def lemmatize(word, index, exc):
    for pos in ("n", "v", "a", "r"):
        if word in exc[pos]:
            return pos, exc[pos][word]
        if word in index[pos]:
            return pos, word
    for pos in ("n", "v", "a"):
        for suffix, repl in SUFFIXES[pos]:
            if word.endswith(suffix):
                base = word[: len(word) - len(suffix)] + repl
                if base and base in index[pos]:
                    return pos, base
    return None, None


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--wordnet", required=True)
    parser.add_argument("--out", default="data")
    parser.add_argument("--top", type=int, default=30000)
    parser.add_argument("--dictionary-top", type=int, default=60000)
    args = parser.parse_args()

    index = {p: read_index(args.wordnet, p) for p in POS}
    data = {p: read_data(args.wordnet, p) for p in POS}
    data["s"] = data["a"]
    exc = {p: read_exceptions(args.wordnet, p) for p in POS}

    def freq(word):
        return int(round(wordfreq.word_frequency(word, "en") * 1e9))

    def synonyms_of(lemma, pos):
        out = []
        for offset in index[pos].get(lemma, []):
            words, related = data[pos][offset]
            out.extend(words)
            for rpos, roff in related:
                out.extend(data[rpos][roff][0])
        seen, result = set(), []
        for w in out:
            if w == lemma or w in seen or not SYNONYM_RE.match(w):
                continue
            seen.add(w)
            result.append(w)
        return result[:MAX_SYNONYMS]

    words = [w for w in wordfreq.top_n_list("en", args.top)
             if re.fullmatch(r"[a-z]+(?:'[a-z]+)?", w)]
    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "lexicon.tsv"), "w", encoding="utf-8") as f:
        f.write("# word\tlemma\tsynonyms\tfrequency (per 1e9 tokens)\n")
        for w in words:
            pos, lemma = lemmatize(w, index, exc)
            if lemma is None:
                f.write(f"{w}\t{w}\t\t{freq(w)}\n")
                continue
            syns = synonyms_of(lemma, pos)
            f.write(f"{w}\t{lemma}\t{','.join(syns)}\t{freq(w)}\n")

    dictionary = sorted({w for w in wordfreq.top_n_list("en", args.dictionary_top)
                         if re.fullmatch(r"[a-z]+(?:'[a-z]+)*", w)})
    with open(os.path.join(args.out, "dictionary.txt"), "w", encoding="utf-8") as f:
        for w in dictionary:
            f.write(w + "\n")


if __name__ == "__main__":
    main()
