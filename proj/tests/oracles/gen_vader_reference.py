"""Freeze reference compound scores for tests/fixtures/vader_reference.tsv.

Uses the published vaderSentiment package (pip install vaderSentiment) as an
independent implementation. Compound scores are written unrounded.
"""
import math
import random
import sys

from vaderSentiment.vaderSentiment import BOOSTER_DICT, SentiText, SentimentIntensityAnalyzer


def unrounded_compound(analyzer, text):
    sentitext = SentiText(text.strip())
    sentiments = []
    words = sentitext.words_and_emoticons
    for i, item in enumerate(words):
        if item.lower() in BOOSTER_DICT:
            sentiments.append(0)
            continue
        if i < len(words) - 1 and item.lower() == "kind" and words[i + 1].lower() == "of":
            sentiments.append(0)
            continue
        sentiments = analyzer.sentiment_valence(0, sentitext, item, i, sentiments)
    sentiments = analyzer._but_check(words, sentiments)
    if not sentiments:
        return 0.0
    s = float(sum(sentiments))
    amp = analyzer._punctuation_emphasis(text.strip())
    if s > 0:
        s += amp
    elif s < 0:
        s -= amp
    n = s / math.sqrt(s * s + 15)
    return max(-1.0, min(1.0, n))


VOCAB = (
    "elephant herd tusker village farmers forest officials crops paddy night road people "
    "killed death attack rampage terror menace panic destroyed damaged rescue safe calm "
    "helped relief happy good great bad sad terrible horrible love hope fear angry "
    "injured dead tragic worst best peaceful protect conservation support welcome"
).split()
MODIFIERS = "very extremely not never no without kind of but least at so this barely slightly really".split()
FILLER = "the a was were and in on of to by near after".split()

FIXED = [
    "",
    "The elephant walked calmly.",
    "Two people were killed by a rogue tusker.",
    "No casualties were reported.",
    "Villagers were TERRIFIED after the herd DESTROYED crops!!!",
    "Officials said the situation is not bad, but the fear remains.",
    "It was kind of sad to see the calf separated from the herd.",
    "Never so happy to see the forest department act quickly!",
    "Is this the worst conflict season?? Residents are afraid??",
    "At least the elephants were not harmed.",
    "The least helpful response came from officials.",
    "Without a doubt, the rescue was a success.",
    "The rampaging herd caused havoc and chaos in the village.",
    "Forest staff rescued a calf that fell into a well.",
    "Farmers lost lives and crops; the trauma continues.",
]


def main(out_path, n_random=285, seed=20240611):
    rng = random.Random(seed)
    analyzer = SentimentIntensityAnalyzer()
    texts = list(FIXED)
    for _ in range(n_random):
        words = []
        for _ in range(rng.randint(3, 40)):
            r = rng.random()
            if r < 0.45:
                w = rng.choice(VOCAB)
            elif r < 0.65:
                w = rng.choice(MODIFIERS)
            else:
                w = rng.choice(FILLER)
            if rng.random() < 0.08:
                w = w.upper()
            if rng.random() < 0.1:
                w += rng.choice([".", ",", "!", "?", "!!"])
            words.append(w)
        texts.append(" ".join(words))
    with open(out_path, "w", encoding="utf-8") as f:
        for t in texts:
            f.write("%s\t%r\n" % (t, unrounded_compound(analyzer, t)))


if __name__ == "__main__":
    main(sys.argv[1])
