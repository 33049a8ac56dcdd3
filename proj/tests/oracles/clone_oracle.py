#!/usr/bin/env python3
"""Independent reference pipeline used to freeze expected values for the
C++ test suites.

It shares no code with the library: Java tokens come from one regular
expression, identifier splitting from regex substitutions, stemming from
NLTK's Snowball English stemmer, and ranking from dense
numpy TF-IDF vectors compared by brute force.

    python3 tests/oracles/clone_oracle.py desk    # writes tests/fixtures/desk/expected/
    python3 tests/oracles/clone_oracle.py stems   # writes tests/data/stem_vectors.tsv
"""
import math
import os
import re
import sys

import numpy as np
from nltk.stem.snowball import SnowballStemmer

ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
STEMMER = SnowballStemmer("english")

RESERVED = set("""abstract assert boolean break byte case catch char class const continue default do
double else enum extends final finally float for goto if implements import instanceof int interface
long native new package private protected public return short static strictfp super switch
synchronized this throw throws transient try void volatile while""".split())
assert len(RESERVED) == 50

TOKEN = re.compile(r'''
    (?P<comment>//[^\n]*|/\*.*?\*/)
  | (?P<string>"""(?:.|\n)*?"""|"(?:\\.|[^"\\])*"|'(?:\\.|[^'\\])*')
  | (?P<number>\.?[0-9][0-9A-Za-z_.]*)
  | (?P<word>[A-Za-z_$][A-Za-z0-9_$]*)
  | (?P<other>\S)
''', re.S | re.X)


def stem(word):
    return word if len(word) <= 2 else STEMMER.stem(word)


def load_stopwords(path=os.path.join(ROOT, "core", "data", "english_stopwords.txt")):
    words = set()
    for line in open(path):
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return words


def split_identifier(ident):
    out = []
    for run in re.split(r"[^A-Za-z0-9]+", ident):
        run = re.sub(r"([a-z0-9])([A-Z])", r"\1 \2", run)
        run = re.sub(r"([A-Z])(?=[A-Z][a-z])", r"\1 ", run)
        out.extend(w.lower() for w in run.split())
    return out


def dedup_stem(words):
    seen, out = set(), []
    for w in words:
        if len(w) < 2:
            continue
        s = stem(w)
        if len(s) >= 2 and s not in seen:
            seen.add(s)
            out.append(s)
    return out


def identifiers(source):
    words = []
    for m in TOKEN.finditer(source):
        if m.lastgroup == "word":
            w = m.group()
            if w in RESERVED or w in ("true", "false", "null"):
                continue
            words.extend(split_identifier(w))
    return dedup_stem(words)


def prose_words(text, stopwords):
    words = [w.lower() for w in re.split(r"[^A-Za-z0-9]+", text) if w]
    return dedup_stem([w for w in words if w not in stopwords])


def read_tsv(path):
    rows = []
    for line in open(path, encoding="utf-8"):
        line = line.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append(line.split("\t"))
    return rows


class DenseIndex:
    def __init__(self, docs):
        self.vocab = sorted({t for d in docs for t in d})
        self.pos = {t: i for i, t in enumerate(self.vocab)}
        J = len(docs)
        df = np.zeros(len(self.vocab))
        for d in docs:
            for t in set(d):
                df[self.pos[t]] += 1
        self.idf = np.log(J / df)
        self.matrix = np.vstack([self.vector(d) for d in docs])

    def vector(self, terms):
        v = np.zeros(len(self.vocab))
        counts = {}
        for t in terms:
            if t in self.pos:
                counts[t] = counts.get(t, 0) + 1
        for t, tf in counts.items():
            v[self.pos[t]] = (1 + math.log(tf)) * self.idf[self.pos[t]]
        n = np.linalg.norm(v)
        return v / n if n > 0 else v

    def rank(self, terms, top_k):
        scores = self.matrix @ self.vector(terms)
        order = sorted((i for i in range(len(scores)) if scores[i] > 0), key=lambda i: (-scores[i], i))
        return [(i, float(scores[i])) for i in order[:top_k]]


def desk():
    base = os.path.join(ROOT, "tests", "fixtures", "desk")
    stopwords = load_stopwords()
    manifest = [(int(c), p, int(s), int(e)) for c, p, s, e in read_tsv(os.path.join(base, "manifest.tsv"))]
    descriptions = {int(c): d.strip() for c, d in read_tsv(os.path.join(base, "annotations.tsv"))}
    pairs = [r for r in read_tsv(os.path.join(base, "pairs.tsv"))]
    queries = [(q, int(c), t) for q, c, t in read_tsv(os.path.join(base, "queries.tsv"))]

    idents = []
    for cls, path, start, end in manifest:
        lines = open(os.path.join(base, "src", path), encoding="utf-8").read().split("\n")
        idents.append(identifiers("\n".join(lines[start - 1:end])))

    out_dir = os.path.join(base, "expected")
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "identifiers.tsv"), "w") as f:
        for i, terms in enumerate(idents):
            f.write("%d\t%s\n" % (i, " ".join(terms)))

    for strategy in ("baseline", "manual"):
        docs = []
        for (cls, _, _, _), terms in zip(manifest, idents):
            ann = prose_words(descriptions[cls], stopwords) if strategy == "manual" else []
            docs.append(list(dict.fromkeys(ann + terms)))
        index = DenseIndex(docs)

        for top_k in (1, 3, 900):
            found = set()
            for i, terms in enumerate(idents):
                for j, _ in index.rank(terms, top_k):
                    if j != i:
                        found.add(frozenset((i, j)))
            labeled = {}
            for row in pairs:
                labeled.setdefault(row[2], set()).add(frozenset((int(row[0]), int(row[1]))))
            with open(os.path.join(out_dir, "%s_recall_top%d.csv" % (strategy, top_k)), "w") as f:
                f.write("ptype,found,total,recall\n")
                for t in ("T1", "T2", "VST3", "ST3", "MT3", "WT3_4"):
                    if t in labeled:
                        hit = len(labeled[t] & found)
                        f.write("%s,%d,%d,%.4f\n" % (t, hit, len(labeled[t]), hit / len(labeled[t])))

        rows = []
        for qid, cls, text in queries:
            ranked = [manifest[j][0] for j, _ in index.rank(prose_words(text, stopwords), 10)]
            rr = next((1.0 / (r + 1) for r, c in enumerate(ranked) if c == cls), 0.0)
            rows.append((qid, rr) + tuple(sum(1 for c in ranked[:k] if c == cls) / k for k in (1, 5, 10)))
        with open(os.path.join(out_dir, "%s_nlq.csv" % strategy), "w") as f:
            f.write("query_id,mrr,p1,p5,p10\n")
            for r in rows:
                f.write("%s,%.4f,%.4f,%.4f,%.4f\n" % r)
            means = [sum(r[i] for r in rows) / len(rows) for i in range(1, 5)]
            f.write("average,%.4f,%.4f,%.4f,%.4f\n" % tuple(means))


EDGE_WORDS = set("""
skis skies dying lying tying idly gently ugly early only singly sky news howe atlas
cosmos bias andes inning innings outing outings canning cannings herring herrings
earring earrings proceed proceeds proceeded exceed exceeding succeed succeeded
generate generously general communication community communism arsenal arsenic
yell youth yay player saying enjoying boy toy sayyid yyy ayyy cry cried cries dies
ties lies spied kiwis gas gaps this caress caresses ponies ties us ss bus grass
agreed feed bleed luxuriated hopping hoping fizzed filing bled sized conflated
troubled falling hissing tanned fitted owned agreeing guaranteed feeding
happy sky shy say rational conditional valency hesitancy digitizer
conformabli radicalli differentli vileli analogousli vietnamization predication
operator feudalism decisiveness hopefulness callousness formaliti sensitiviti
sensibiliti geology apology archaeology probably lessly hopelessly formalize
electriciti electrical hopeful goodness demonstrative adoption adjustment
dependent revival allowance inference airliner gyroscopic adjustable defensible
irritant replacement angularity homologous effective bowdlerize controll roll
rate cease hope bed abed ode axed mixed bowed mowed shed sheds shredded
""".split())


def stems():
    text = ""
    for f in sorted(os.listdir(os.path.join(ROOT, "tests", "fixtures"))):
        for dirpath, _, files in os.walk(os.path.join(ROOT, "tests", "fixtures", f)):
            for name in files:
                if name.endswith(".java"):
                    src = open(os.path.join(dirpath, name), encoding="utf-8").read()
                    text += " " + " ".join(w for m in TOKEN.finditer(src) if m.lastgroup == "word"
                                           for w in split_identifier(m.group()))
    for dirpath, _, files in os.walk(os.path.join(ROOT, "examples")):
        for name in sorted(files):
            text += " " + open(os.path.join(dirpath, name), encoding="utf-8", errors="replace").read()
    words = sorted({w.lower() for w in re.findall(r"[A-Za-z]+", text)
                    for w in split_identifier(w)} | EDGE_WORDS)
    out = os.path.join(ROOT, "tests", "data", "stem_vectors.tsv")
    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as f:
        f.write("# word<TAB>stem, from NLTK SnowballStemmer english; words of <= 2 chars unchanged\n")
        for w in words:
            f.write("%s\t%s\n" % (w, stem(w)))
    print(len(words), "vectors")


if __name__ == "__main__":
    {"desk": desk, "stems": stems}[sys.argv[1]]()
