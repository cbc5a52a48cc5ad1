"""Sentence-level SARI with collections.Counter, averaged over a corpus.

Kept independent of the C++ code: n-grams are tuples, counts go through
Counter arithmetic, and tokens come from sacrebleu's 13a tokenizer applied to
lowercased text.
"""

from collections import Counter

from sacrebleu.tokenizers.tokenizer_13a import Tokenizer13a

_tok = Tokenizer13a()


def tokens(text):
    return _tok(text.lower()).split()


def ngrams(toks, n):
    return [tuple(toks[i : i + n]) for i in range(len(toks) - n + 1)]


def _scale(counter, k):
    return Counter({g: c * k for g, c in counter.items()})


def sari_ngram(sgrams, cgrams, rgramslist, numref):
    rcount = Counter(g for rgrams in rgramslist for g in rgrams)
    s_rep = _scale(Counter(sgrams), numref)
    c_rep = _scale(Counter(cgrams), numref)

    keep_rep = s_rep & c_rep
    keep_good = keep_rep & rcount
    keep_all = s_rep & rcount
    p_num = sum(keep_good[g] / keep_rep[g] for g in keep_good)
    r_num = sum(keep_good[g] / keep_all[g] for g in keep_good)
    keep_p = p_num / len(keep_rep) if keep_rep else 0.0
    keep_r = r_num / len(keep_all) if keep_all else 0.0
    keep = 2 * keep_p * keep_r / (keep_p + keep_r) if keep_p + keep_r > 0 else 0.0

    del_rep = s_rep - c_rep
    del_good = del_rep - rcount
    del_num = sum(del_good[g] / del_rep[g] for g in del_good)
    delete = del_num / len(del_rep) if del_rep else 0.0

    added = set(cgrams) - set(sgrams)
    added_good = added & set(rcount)
    ref_added = set(rcount) - set(sgrams)
    add_p = len(added_good) / len(added) if added else 0.0
    add_r = len(added_good) / len(ref_added) if ref_added else 0.0
    add = 2 * add_p * add_r / (add_p + add_r) if add_p + add_r > 0 else 0.0
    return keep, delete, add


def sentence_sari(src, hyp, refs, max_order=4):
    s, c = tokens(src), tokens(hyp)
    rs = [tokens(r) for r in refs]
    keep = delete = add = 0.0
    for n in range(1, max_order + 1):
        k, d, a = sari_ngram(ngrams(s, n), ngrams(c, n), [ngrams(r, n) for r in rs], len(refs))
        keep += k
        delete += d
        add += a
    keep, delete, add = (100.0 * x / max_order for x in (keep, delete, add))
    return {"sari": (keep + delete + add) / 3, "f_keep": keep, "f_delete": delete, "f_add": add}


def corpus_sari(sources, hyps, refsets, max_order=4):
    items = [sentence_sari(s, h, r, max_order) for s, h, r in zip(sources, hyps, refsets)]
    out = {k: sum(it[k] for it in items) / len(items) for k in ("f_keep", "f_delete", "f_add")}
    out["sari"] = (out["f_keep"] + out["f_delete"] + out["f_add"]) / 3
    return out, items
