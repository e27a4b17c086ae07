"""Build the 25-article synthetic corpus and its expected reports.

NEPL terms and victim flags are annotated by hand per article below. Compound
scores come from the published vaderSentiment package, so the only inputs
shared with the C++ code are the bundled data files. Writes
tests/fixtures/corpus25.jsonl and tests/fixtures/corpus25_expected.json.
"""
import json
import os
import sys

import yaml
from vaderSentiment.vaderSentiment import SentimentIntensityAnalyzer

from gen_vader_reference import unrounded_compound

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")
DATA = os.path.join(HERE, "..", "..", "data")

# (id, date, title, body, planted NEPL terms in text order, victim reported)
ARTICLES = [
    ("s01", "2022-10-03", "Rogue tusker attack in Hassan",
     "A farmer was killed when a rogue tusker charged at him near his field. "
     "Villagers said the animal had destroyed crops for weeks.",
     ["rogue tusker", "rogue tusker", "charged", "destroyed"], True),
    ("s02", "2022-10-09", "Forest department opens elephant safari",
     "The forest department opened a new elephant safari for tourists. "
     "Visitors enjoyed the beautiful scenery and praised the friendly guides.",
     [], False),
    ("s03", "2022-10-17", "Herd spotted near school",
     "A herd of elephants was spotted near the school on Tuesday. "
     "Teachers kept the children indoors until the animals moved away.",
     [], False),
    ("s04", "2022-10-28", "Crop loss reported in Kodagu",
     "Farmers in Kodagu reported that a herd invaded paddy fields and uprooted banana plants. "
     "Officials inspected the fields.",
     ["invaded", "uprooted"], False),
    ("s05", "2022-11-02", "Elephant enters village at night",
     "An elephant entered the village at night and damaged a compound wall. "
     "The herd trampled sugarcane and flattened a shed. "
     "Residents stayed indoors.",
     ["damaged", "trampled", "flattened"], False),
    ("s06", "2022-11-08", "Calf reunited with herd",
     "Forest staff reunited a lost calf with its herd. "
     "Wildlife lovers celebrated the successful rescue and thanked the team.",
     [], False),
    ("s07", "2022-11-15", "Two dead after elephant encounter",
     "Two workers lost lives in an encounter with a wild tusker at the estate. "
     "Panic gripped the area and families are in shock.",
     ["encounter", "encounter", "wild tusker", "panic", "shock"], True),
    ("s08", "2022-11-21", "Survey counts elephants in reserve",
     "The annual survey counted 212 elephants in the reserve. "
     "Researchers will publish the report in March.",
     [], False),
    ("s09", "2022-11-29", "Tusker blocks highway",
     "A lone tusker blocked the highway for an hour. "
     "Motorists waited while guards cleared the road.",
     ["lone tusker"], False),
    ("s10", "2022-12-04", "Elephant menace returns",
     "The elephant menace has returned to the valley. "
     "A herd stormed a plantation and wrecked irrigation pipes. "
     "No casualties were reported.",
     ["menace", "menace", "stormed", "wrecked"], False),
    ("s11", "2022-12-11", "Villagers honour elephant guardians",
     "Villagers honoured the volunteers who guard elephant corridors. "
     "The ceremony was joyful and everyone shared a wonderful meal.",
     [], False),
    ("s12", "2022-12-19", "Farmer injured near reserve",
     "A farmer is in critical condition after a furious elephant gored him near the reserve. "
     "Doctors said his trauma is severe.",
     ["furious", "gored"], True),
    ("s13", "2022-12-27", "Electric fence repaired",
     "Workers repaired the solar fence that a herd had flattened and uprooted along the reserve boundary. "
     "The work took three days.",
     ["flattened", "uprooted"], False),
    ("s14", "2023-02-01", "Herd moves through tea estate",
     "A herd stormed the tea estate, uprooted saplings and flattened a fence on Sunday. "
     "Estate managers asked workers to stay away from the slopes.",
     ["stormed", "uprooted", "flattened"], False),
    ("s15", "2023-02-06", "Rampaging herd damages houses",
     "A rampaging herd damaged three houses in the hamlet. "
     "The destruction left families homeless.",
     ["rampaging herd", "rampaging herd", "damaged", "destruction"], False),
    ("s16", "2023-02-13", "Students learn about elephants",
     "Students learned about elephant behaviour in a fun workshop. "
     "Teachers said the children loved the lively session.",
     [], False),
    ("s17", "2023-02-20", "Man trampled to death",
     "A man was trampled to death by an elephant while collecting firewood. "
     "Villagers staged a protest demanding compensation.",
     ["trampled", "trampled"], True),
    ("s18", "2023-02-27", "Standoff at forest office",
     "Villagers held a standoff with officials over elephant raids. "
     "Officials promised new barriers.",
     ["standoff", "standoff"], False),
    ("s19", "2023-03-05", "Elephant drinks from village tank",
     "An elephant drank from the village tank and walked back into the forest. "
     "Residents watched from a distance.",
     [], False),
    ("s20", "2023-03-12", "Terror tusker captured",
     "Forest officials captured the terror tusker that intruded into farms. "
     "The ferocious animal had ruined harvests across the taluk. "
     "Officials said no one was hurt.",
     ["terror tusker", "terror tusker", "intruded", "ferocious", "ruined"], False),
    ("s21", "2023-03-19", "Rail line speed limits help elephants",
     "Railway officials reduced train speeds near elephant corridors. "
     "Conservationists welcomed the helpful decision.",
     [], False),
    ("s22", "2023-03-26", "Night patrols increased",
     "Night patrols were increased in villages bordering the sanctuary. "
     "Guards will use torches and sirens.",
     [], False),
    ("s23", "2023-04-02", "Herd raids maize fields",
     "A herd of seven elephants entered maize fields on Friday. "
     "The beast at the front smashed a hut. "
     "Farmers were frightened and kept awake.",
     ["beast", "smashed", "frightened"], False),
    ("s24", "2023-04-16", "Elephant census volunteers needed",
     "The forest department is seeking volunteers for the elephant census. "
     "Training will be provided.",
     [], False),
    ("s25", "2023-04-30", "Worker killed by wild elephant",
     "A plantation worker was killed by a wild elephant early on Monday. "
     "The enraged animal had been roaming near the estate.",
     ["enraged"], True),
]

POS, NEG, NEPL_MIN = 0.20, -0.20, 3


def main():
    with open(os.path.join(DATA, "nepl.yaml")) as f:
        nepl = yaml.safe_load(f)
    categories = list(nepl)
    term_categories = {}
    for cat, terms in nepl.items():
        for t in terms:
            term_categories.setdefault(t.lower(), []).append(cat)

    analyzer = SentimentIntensityAnalyzer()
    per_article = []
    category_articles = {c: 0 for c in categories}
    crosstab = [0, 0, 0, 0]
    months = {}
    rows = []
    for aid, date, title, body, terms, victim in ARTICLES:
        full = title + "\n" + body
        c = unrounded_compound(analyzer, full)
        count = len(terms)
        if c > POS:
            label, stage = 1, "compound"
        elif c < NEG:
            label, stage = -1, "compound"
        else:
            label, stage = (-1 if count >= NEPL_MIN else 0), "regex"
        present = set()
        for t in terms:
            present.update(term_categories[t])
        for cat in present:
            category_articles[cat] += 1
        cell = (0 if count else 1) if victim else (2 if count else 3)
        crosstab[cell] += 1
        ym = date[:7]
        m = months.setdefault(ym, [0, 0])
        m[0] += 1
        m[1] += label == -1
        per_article.append({"id": aid, "label": label, "stage": stage, "compound": round(c, 4),
                            "fear_count": count, "victim_flag": victim})
        rows.append({"id": aid, "url": "https://example.org/" + aid, "title": title, "subheadline": "",
                     "body": body, "publish_date": date, "source": "Synthetic"})

    # Calendar months from first to last, zero-filled, trailing window 3.
    first, last = min(months), max(months)
    y, mo = int(first[:4]), int(first[5:])
    series = []
    while True:
        key = "%04d-%02d" % (y, mo)
        n, neg = months.get(key, [0, 0])
        series.append([key, n, neg, neg / n if n else 0.0])
        if key == last:
            break
        y, mo = (y + 1, 1) if mo == 12 else (y, mo + 1)
    monthly = []
    for i, (key, n, neg, rate) in enumerate(series):
        window = series[max(0, i - 2): i + 1]
        monthly.append({"month": key, "article_count": n, "negative_count": neg, "negativity_rate": rate,
                        "smoothed_count": sum(w[1] for w in window) / len(window),
                        "smoothed_rate": sum(w[3] for w in window) / len(window)})

    expected = {
        "articles": per_article,
        "crosstab": crosstab,
        "category_articles": [[c, category_articles[c]] for c in categories],
        "monthly": monthly,
    }
    with open(os.path.join(FIXTURES, "corpus25.jsonl"), "w") as f:
        for r in rows:
            f.write(json.dumps(r) + "\n")
    with open(os.path.join(FIXTURES, "corpus25_expected.json"), "w") as f:
        json.dump(expected, f, indent=2)
        f.write("\n")
    for a in per_article:
        print(a, file=sys.stderr)


if __name__ == "__main__":
    main()
