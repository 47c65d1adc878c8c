#!/usr/bin/env python3
"""Reference rule-based sentiment scorer (VADER rule set).

Standalone implementation used to precompute the oracle expectations in
tests/data/sentiment_oracle.tsv. It is intentionally independent of the C++
engine: any behavioural drift between the two shows up as an oracle mismatch.

Usage:
    sentiment_reference.py LEXICON.tsv < titles.txt > scored.tsv
"""

import math
import string
import sys

B_INCR = 0.293
B_DECR = -0.293
C_INCR = 0.733
N_SCALAR = -0.74

NEGATE = {
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
    "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't", "didn't",
    "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt",
    "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
    "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope",
    "nor", "not", "nothing", "nowhere", "oughtnt", "shant", "shouldnt",
    "uhuh", "wasnt", "werent", "oughtn't", "shan't", "shouldn't", "uh-uh",
    "wasnt", "weren't", "without", "wont", "wouldnt", "won't", "wouldn't",
    "rarely", "seldom", "despite",
}

BOOSTER_DICT = {
    "absolutely": B_INCR, "amazingly": B_INCR, "awfully": B_INCR,
    "completely": B_INCR, "considerable": B_INCR, "considerably": B_INCR,
    "decidedly": B_INCR, "deeply": B_INCR, "enormous": B_INCR,
    "enormously": B_INCR, "entirely": B_INCR, "especially": B_INCR,
    "exceptional": B_INCR, "exceptionally": B_INCR, "extreme": B_INCR,
    "extremely": B_INCR, "fabulously": B_INCR, "fully": B_INCR,
    "greatly": B_INCR, "highly": B_INCR, "hugely": B_INCR,
    "incredible": B_INCR, "incredibly": B_INCR, "intensely": B_INCR,
    "major": B_INCR, "majorly": B_INCR, "more": B_INCR, "most": B_INCR,
    "particularly": B_INCR, "purely": B_INCR, "quite": B_INCR,
    "really": B_INCR, "remarkably": B_INCR, "so": B_INCR,
    "substantially": B_INCR, "thoroughly": B_INCR, "total": B_INCR,
    "totally": B_INCR, "tremendous": B_INCR, "tremendously": B_INCR,
    "unbelievably": B_INCR, "unusually": B_INCR, "utter": B_INCR,
    "utterly": B_INCR, "very": B_INCR,
    "almost": B_DECR, "barely": B_DECR, "hardly": B_DECR,
    "just enough": B_DECR, "kind of": B_DECR, "kinda": B_DECR,
    "kindof": B_DECR, "kind-of": B_DECR, "less": B_DECR, "little": B_DECR,
    "marginal": B_DECR, "marginally": B_DECR, "occasional": B_DECR,
    "occasionally": B_DECR, "partly": B_DECR, "scarce": B_DECR,
    "scarcely": B_DECR, "slight": B_DECR, "slightly": B_DECR,
    "somewhat": B_DECR, "sort of": B_DECR, "sorta": B_DECR,
    "sortof": B_DECR, "sort-of": B_DECR,
}

SPECIAL_CASES = {
    "the shit": 3, "the bomb": 3, "bad ass": 1.5, "badass": 1.5,
    "bus stop": 0.0, "yeah right": -2, "kiss of death": -1.5,
    "to die for": 3, "beating heart": 3.1, "broken heart": -2.9,
}


def negated(words):
    words = [str(w).lower() for w in words]
    for word in words:
        if word in NEGATE:
            return True
        if "n't" in word:
            return True
    return False


def normalize(score, alpha=15):
    norm = score / math.sqrt(score * score + alpha)
    if norm < -1.0:
        return -1.0
    if norm > 1.0:
        return 1.0
    return norm


def allcap_differential(words):
    caps = sum(1 for w in words if w.isupper())
    return 0 < caps < len(words)


def scalar_inc_dec(word, valence, is_cap_diff):
    scalar = 0.0
    wl = word.lower()
    if wl in BOOSTER_DICT:
        scalar = BOOSTER_DICT[wl]
        if valence < 0:
            scalar *= -1
        if word.isupper() and is_cap_diff:
            scalar += C_INCR if valence > 0 else -C_INCR
    return scalar


class SentiText:
    def __init__(self, text):
        self.text = text
        self.words_and_emoticons = self._words_and_emoticons()
        self.is_cap_diff = allcap_differential(self.words_and_emoticons)

    def _words_and_emoticons(self):
        tokens = self.text.split()
        out = []
        for tok in tokens:
            stripped = tok.strip(string.punctuation)
            out.append(tok if len(stripped) <= 2 else stripped)
        return out


class Scorer:
    def __init__(self, lexicon_path):
        self.lexicon = {}
        with open(lexicon_path, encoding="utf-8") as f:
            for line in f:
                line = line.rstrip("\n")
                if not line or line.startswith("#"):
                    continue
                word, measure = line.split("\t")[0:2]
                self.lexicon[word] = float(measure)

    def polarity(self, text):
        sentitext = SentiText(text)
        words = sentitext.words_and_emoticons
        sentiments = []
        for i, item in enumerate(words):
            valence = 0.0
            if item.lower() in BOOSTER_DICT:
                sentiments.append(valence)
                continue
            if (i < len(words) - 1 and item.lower() == "kind"
                    and words[i + 1].lower() == "of"):
                sentiments.append(valence)
                continue
            sentiments = self._sentiment_valence(valence, sentitext, item, i,
                                                 sentiments)
        sentiments = self._but_check(words, sentiments)
        return self._score_valence(sentiments, text)

    def _sentiment_valence(self, valence, sentitext, item, i, sentiments):
        is_cap_diff = sentitext.is_cap_diff
        words = sentitext.words_and_emoticons
        item_lower = item.lower()
        if item_lower in self.lexicon:
            valence = self.lexicon[item_lower]

            # "no" before another lexicon word acts as negation, not valence
            if (item_lower == "no" and i != len(words) - 1
                    and words[i + 1].lower() in self.lexicon):
                valence = 0.0
            if ((i > 0 and words[i - 1].lower() == "no")
                    or (i > 1 and words[i - 2].lower() == "no")
                    or (i > 2 and words[i - 3].lower() == "no"
                        and words[i - 1].lower() in ("or", "nor"))):
                valence = self.lexicon[item_lower] * N_SCALAR

            if item.isupper() and is_cap_diff:
                valence += C_INCR if valence > 0 else -C_INCR

            for start_i in range(0, 3):
                if (i > start_i
                        and words[i - (start_i + 1)].lower()
                        not in self.lexicon):
                    s = scalar_inc_dec(words[i - (start_i + 1)], valence,
                                       is_cap_diff)
                    if start_i == 1 and s != 0:
                        s *= 0.95
                    if start_i == 2 and s != 0:
                        s *= 0.9
                    valence += s
                    valence = self._negation_check(valence, words, start_i, i)
                    if start_i == 2:
                        valence = self._special_idioms_check(valence, words, i)

            valence = self._least_check(valence, words, i)
        sentiments.append(valence)
        return sentiments

    def _least_check(self, valence, words, i):
        if (i > 1 and words[i - 1].lower() not in self.lexicon
                and words[i - 1].lower() == "least"):
            if words[i - 2].lower() not in ("at", "very"):
                valence *= N_SCALAR
        elif (i > 0 and words[i - 1].lower() not in self.lexicon
                and words[i - 1].lower() == "least"):
            valence *= N_SCALAR
        return valence

    @staticmethod
    def _but_check(words, sentiments):
        lowered = [w.lower() for w in words]
        if "but" in lowered:
            bi = lowered.index("but")
            for si, sentiment in enumerate(sentiments):
                if si < bi:
                    sentiments[si] = sentiment * 0.5
                elif si > bi:
                    sentiments[si] = sentiment * 1.5
        return sentiments

    @staticmethod
    def _special_idioms_check(valence, words, i):
        lowered = [w.lower() for w in words]
        onezero = f"{lowered[i - 1]} {lowered[i]}"
        twoonezero = f"{lowered[i - 2]} {lowered[i - 1]} {lowered[i]}"
        twoone = f"{lowered[i - 2]} {lowered[i - 1]}"
        threetwoone = f"{lowered[i - 3]} {lowered[i - 2]} {lowered[i - 1]}"
        threetwo = f"{lowered[i - 3]} {lowered[i - 2]}"
        sequences = [onezero, twoonezero, twoone, threetwoone, threetwo]
        for seq in sequences:
            if seq in SPECIAL_CASES:
                valence = SPECIAL_CASES[seq]
                break
        if len(lowered) - 1 > i:
            zeroone = f"{lowered[i]} {lowered[i + 1]}"
            if zeroone in SPECIAL_CASES:
                valence = SPECIAL_CASES[zeroone]
        if len(lowered) - 1 > i + 1:
            zeroonetwo = f"{lowered[i]} {lowered[i + 1]} {lowered[i + 2]}"
            if zeroonetwo in SPECIAL_CASES:
                valence = SPECIAL_CASES[zeroonetwo]
        for n_gram in (threetwoone, threetwo, twoone):
            if n_gram in BOOSTER_DICT:
                valence += BOOSTER_DICT[n_gram]
        return valence

    @staticmethod
    def _negation_check(valence, words, start_i, i):
        lowered = [w.lower() for w in words]
        if start_i == 0:
            if negated([lowered[i - 1]]):
                valence *= N_SCALAR
        if start_i == 1:
            if lowered[i - 2] == "never" and lowered[i - 1] in ("so", "this"):
                valence *= 1.25
            elif lowered[i - 2] == "without" and lowered[i - 1] == "doubt":
                pass
            elif negated([lowered[i - 2]]):
                valence *= N_SCALAR
        if start_i == 2:
            if (lowered[i - 3] == "never"
                    and (lowered[i - 2] in ("so", "this")
                         or lowered[i - 1] in ("so", "this"))):
                valence *= 1.25
            elif (lowered[i - 3] == "without"
                    and "doubt" in (lowered[i - 2], lowered[i - 1])):
                pass
            elif negated([lowered[i - 3]]):
                valence *= N_SCALAR
        return valence

    @staticmethod
    def _punctuation_emphasis(text):
        ep_count = min(text.count("!"), 4)
        ep_amplifier = ep_count * 0.292
        qm_count = text.count("?")
        qm_amplifier = 0.0
        if qm_count > 1:
            qm_amplifier = qm_count * 0.18 if qm_count <= 3 else 0.96
        return ep_amplifier + qm_amplifier

    @staticmethod
    def _sift_sentiment_scores(sentiments):
        pos_sum = 0.0
        neg_sum = 0.0
        neu_count = 0
        for s in sentiments:
            if s > 0:
                pos_sum += s + 1
            elif s < 0:
                neg_sum += s - 1
            else:
                neu_count += 1
        return pos_sum, neg_sum, neu_count

    def _score_valence(self, sentiments, text):
        if sentiments:
            sum_s = float(sum(sentiments))
            punct = self._punctuation_emphasis(text)
            if sum_s > 0:
                sum_s += punct
            elif sum_s < 0:
                sum_s -= punct
            compound = normalize(sum_s)
            pos_sum, neg_sum, neu_count = self._sift_sentiment_scores(
                sentiments)
            if pos_sum > math.fabs(neg_sum):
                pos_sum += punct
            elif pos_sum < math.fabs(neg_sum):
                neg_sum -= punct
            total = pos_sum + math.fabs(neg_sum) + neu_count
            pos = math.fabs(pos_sum / total)
            neg = math.fabs(neg_sum / total)
            neu = math.fabs(neu_count / total)
        else:
            compound = 0.0
            pos = neg = neu = 0.0
        return {
            "neg": round(neg, 3),
            "neu": round(neu, 3),
            "pos": round(pos, 3),
            "compound": round(compound, 4),
        }


def main():
    if len(sys.argv) != 2:
        sys.exit(__doc__)
    scorer = Scorer(sys.argv[1])
    for line in sys.stdin:
        title = line.rstrip("\n")
        if not title:
            continue
        scores = scorer.polarity(title)
        print(f"{title}\t{scores['compound']:.4f}\t{scores['pos']:.4f}"
              f"\t{scores['neu']:.4f}\t{scores['neg']:.4f}")


if __name__ == "__main__":
    main()
