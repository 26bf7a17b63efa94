#!/usr/bin/env python3
"""Regenerates the bundled fixture corpus and lexicons under data/."""
import json
import random
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data")
os.makedirs(OUT, exist_ok=True)

PAIRS = [
    ("dog", "tail"), ("dog", "whisker"), ("cat", "tail"), ("cat", "claw"),
    ("elephant", "trunk"), ("elephant", "ear"), ("bird", "wing"),
    ("bird", "beak"), ("bird", "feather"), ("fish", "fin"), ("fish", "gill"),
    ("fish", "scale"), ("tree", "leaf"), ("tree", "branch"), ("tree", "root"),
    ("tree", "bark"), ("snail", "shell"), ("pond snail", "gill"),
    ("turtle", "shell"), ("car", "wheel"), ("car", "engine"), ("car", "door"),
    ("house", "roof"), ("house", "wall"), ("house", "window"),
    ("flower", "petal"), ("flower", "stem"), ("spider", "leg"),
    ("crab", "claw"), ("horse", "mane"), ("horse", "hoof"), ("bee", "sting"),
    ("goat", "horn"), ("deer", "antler"), ("whale", "blowhole"),
    ("shark", "tooth"), ("rabbit", "ear"), ("fox", "tail"), ("lion", "mane"),
    ("frog", "leg"),
]

SEEDS = [
    ("dog", "tail"), ("cat", "claw"), ("elephant", "trunk"), ("bird", "wing"),
    ("fish", "fin"), ("tree", "leaf"), ("snail", "shell"), ("house", "roof"),
    ("car", "wheel"), ("flower", "petal"), ("turtle", "shell"),
    ("shark", "tooth"), ("horse", "hoof"), ("bird", "feather"),
    ("tree", "root"),
]

OTHER = [
    ("bird", "fly"), ("fish", "swim"), ("dog", "meat"), ("cow", "grass"),
    ("bee", "honey"), ("frog", "insect"),
]

IRREGULAR_PLURAL = {
    "leaf": "leaves", "tooth": "teeth", "hoof": "hooves", "wolf": "wolves",
    "fish": "fish", "deer": "deer", "sheep": "sheep",
}


def plural(w):
    parts = w.split()
    head = parts[-1]
    if head in IRREGULAR_PLURAL:
        p = IRREGULAR_PLURAL[head]
    elif head.endswith(("s", "x", "z", "ch", "sh")):
        p = head + "es"
    elif head.endswith("y") and head[-2] not in "aeiou":
        p = head[:-1] + "ies"
    else:
        p = head + "s"
    return " ".join(parts[:-1] + [p])


def main():
    rng = random.Random(20260824)
    sentences = []

    def add(text, conf, tokens=None, pos=None):
        rec = {"id": f"s{len(sentences) + 1:03d}", "text": text,
               "confidence": round(conf, 3)}
        if tokens:
            rec["tokens"] = tokens
        if pos:
            rec["pos"] = pos
        sentences.append(rec)

    # The displayed markup example sentence.
    add("Some pond snails have gills to breathe in water.", 0.95)

    quantifiers = ["", "Most ", "Some ", "Many ", "All "]
    templates = [
        "{q}{W} have {P}.",
        "{q}{W} have {P} and use them every day.",
        "{q}{W} usually have strong {P}.",
    ]
    # Positive-pattern sentences: several surface variants per pair.
    for i, (w, p) in enumerate(PAIRS):
        W, P = plural(w), plural(p)
        n_variants = 3 if i < 20 else 2
        for v in range(n_variants):
            q = quantifiers[rng.randrange(len(quantifiers))]
            t = templates[v % len(templates)]
            text = t.format(q=q, W=(W if q else W.capitalize()), P=P)
            add(text, rng.uniform(0.55, 0.99))

    # Other-relation filler (negative signal for distant supervision).
    fillers = [
        "Birds can fly south in winter.",
        "Fish swim in cold water.",
        "Dogs eat meat and bones.",
        "Cows eat grass in green fields.",
        "Bees produce honey in hives.",
        "Frogs eat insects near ponds.",
        "Birds fly over the trees.",
        "Fish swim near the shore.",
        "Dogs eat meat every day.",
        "Cows eat grass all summer.",
        "Bees produce honey for the colony.",
        "Frogs eat insects at night.",
    ]
    for f in fillers:
        add(f, rng.uniform(0.55, 0.95))

    # Salience fixture.
    add("Tree bark from the Kapok tree.", 0.8)

    # Low-confidence records, removed by the generic filter.
    low = [
        "This particular dog lost its tail.",
        "Yesterday a cat sat on the mat.",
        "My neighbor's car needs a new wheel.",
        "That old house had a leaky roof.",
    ]
    k = 0
    while len(sentences) < 199:
        add(low[k % len(low)], rng.uniform(0.05, 0.49))
        k += 1
    # Confidence exactly at the threshold: must be excluded by strict >.
    add("Trees have green leaves in spring.", 0.5)
    assert len(sentences) == 200, len(sentences)

    with open(os.path.join(OUT, "mini_corpus.jsonl"), "w") as f:
        for rec in sentences:
            f.write(json.dumps(rec) + "\n")

    with open(os.path.join(OUT, "seeds_haspart.tsv"), "w") as f:
        for w, p in SEEDS:
            f.write(f"{w}\t{p}\n")
    with open(os.path.join(OUT, "seeds_other.tsv"), "w") as f:
        for a, b in OTHER:
            f.write(f"{a}\t{b}\n")

    with open(os.path.join(OUT, "quantifiers.txt"), "w") as f:
        for q in ["all", "some", "most", "many", "few", "several", "each",
                  "every", "no"]:
            f.write(q + "\n")

    titles = sorted({w for w, _ in PAIRS} | {p for _, p in PAIRS} |
                    {"kapok", "bark", "large intestine", "pond snail",
                     "water", "gill", "tree", "winter", "summer", "shore",
                     "pond", "field", "hive", "colony", "insect", "meat",
                     "grass", "honey", "leg", "ear", "sting"})
    with open(os.path.join(OUT, "titles.txt"), "w") as f:
        for t in titles:
            f.write(t + "\n")
        # Disambiguation pages: titled but never linked.
        for d in ["mercury", "jaguar", "bass", "scale"]:
            f.write(d + "\tD\n")

    vocab = set()
    for w, p in PAIRS:
        vocab.update(w.split())
        vocab.update(p.split())
    # A few deliberately out-of-vocab terms.
    for rare in ["blowhole", "antler", "mane"]:
        vocab.discard(rare)
    vocab.update(["water", "tree", "kapok", "bark"])
    with open(os.path.join(OUT, "vocab_grade5.txt"), "w") as f:
        for wd in sorted(vocab):
            f.write(wd + "\n")

    with open(os.path.join(OUT, "stopwords.txt"), "w") as f:
        for s in ["a", "an", "the", "of", "to", "in", "on", "and", "or",
                  "for", "with"]:
            f.write(s + "\n")

    senses = []
    mono = {
        "dog": "a domesticated carnivorous mammal kept as a pet",
        "cat": "a small domesticated feline animal with soft fur",
        "tail": "the rear appendage of an animal body",
        "whisker": "a long stiff hair growing near the mouth of an animal",
        "claw": "a curved pointed nail on the foot of an animal",
        "wing": "the limb a bird or insect uses to fly",
        "beak": "the hard pointed mouth of a bird",
        "feather": "one of the light growths covering the body of a bird",
        "fin": "the flat limb a fish uses to swim",
        "gill": "the organ a fish or snail uses to breathe in water",
        "leaf": "the flat green organ of a plant",
        "branch": "a woody limb growing from the trunk of a tree",
        "root": "the underground organ that anchors a plant",
        "shell": "the hard outer covering of an animal such as a snail",
        "wheel": "a circular frame that rotates to move a vehicle",
        "engine": "the machine that powers a vehicle",
        "door": "a hinged panel closing an entrance",
        "roof": "the upper covering of a building",
        "wall": "an upright structure enclosing a building",
        "window": "an opening in a wall fitted with glass",
        "petal": "one of the colored segments of a flower",
        "stem": "the main stalk of a plant",
        "elephant": "a very large gray mammal with a long flexible nose",
        "snail": "a small mollusc with a spiral shell",
        "pond snail": "a freshwater snail living in ponds",
        "ear": "the organ of hearing on the head of an animal",
        "hoof": "the horny foot covering of a horse or goat",
        "horn": "a hard pointed growth on the head of an animal",
        "tooth": "one of the hard white structures in the mouth used for biting",
    }
    for lemma, gloss in sorted(mono.items()):
        senses.append((lemma, lemma.replace(" ", "_") + "%1", gloss))
    poly = {
        "bark": [("bark%tree", "the tough outer covering of the trunk of a tree"),
                 ("bark%dog", "the sharp loud cry of a dog")],
        "trunk": [("trunk%elephant", "the long flexible nose of an elephant"),
                  ("trunk%tree", "the main woody stem of a tree"),
                  ("trunk%car", "the luggage compartment of a car")],
        "scale": [("scale%fish", "one of the thin bony plates covering the skin of a fish"),
                  ("scale%weigh", "an instrument for weighing objects")],
        "mane": [("mane%horse", "the long hair on the neck of a horse"),
                 ("mane%lion", "the heavy growth of hair around the head of a male lion")],
    }
    for lemma, entries in sorted(poly.items()):
        for sid, gloss in entries:
            senses.append((lemma, sid, gloss))
    with open(os.path.join(OUT, "senses.tsv"), "w") as f:
        for lemma, sid, gloss in senses:
            f.write(f"{lemma}\t{sid}\t{gloss}\n")

    bark = ["the tough outer covering of the trunk of a tree",
            "the sharp loud cry of a dog"]
    trunk = ["the long flexible nose of an elephant",
             "the main woody stem of a tree",
             "the luggage compartment of a car"]
    scale = ["one of the thin bony plates covering the skin of a fish",
             "an instrument for weighing objects"]
    mane = ["the long hair on the neck of a horse",
            "the heavy growth of hair around the head of a male lion"]

    def case(sentence, word, glosses, correct):
        return {"sentence": sentence, "word": word, "glosses": glosses,
                "correct": correct}

    ten = [
        case("The dog let out a loud bark at the stranger.", "bark", bark, 1),
        case("Thick bark protects the trunk of the tree.", "bark", bark, 0),
        case("Kapok trees have thick bark covering the trunk.", "bark", bark, 0),
        case("The elephant lifted its trunk to grab the leaves.", "trunk", trunk, 0),
        case("The woody trunk of the tree was covered in moss.", "trunk", trunk, 1),
        case("He put the luggage in the trunk of the car.", "trunk", trunk, 2),
        case("Each scale on the skin of the fish shone brightly.", "scale", scale, 0),
        case("He used a scale for weighing the heavy objects.", "scale", scale, 1),
        case("The mane on the neck of the horse was braided.", "mane", mane, 0),
        case("The male lion shook the hair around his head and mane.", "mane", mane, 1),
    ]
    with open(os.path.join(OUT, "wsd_cases_10.jsonl"), "w") as f:
        for c in ten:
            f.write(json.dumps(c) + "\n")

    # 41 polysemous contexts in the style of a hand-labeled sample. A few
    # contexts carry no lexical overlap at all, so a token-overlap scorer
    # cannot get them right; the pass bar for this suite is 80 percent.
    big = []
    bark_tree = [
        "The rough bark of the old tree was covered in moss.",
        "Bark protects the trunk of a tree from insects.",
        "The outer covering of the trunk is called bark.",
        "Strips of bark peeled away from the tree trunk.",
        "The tree shed flakes of bark every summer.",
        "Bark from the kapok tree is tough and thick.",
    ]
    bark_dog = [
        "The loud bark of the dog woke the street.",
        "A sharp bark warned us the dog had heard something.",
        "The dog gave a low bark and a loud cry.",
        "Every dog in the yard answered with a bark.",
        "With a sharp cry and a bark the dog ran off.",
    ]
    trunk_elephant = [
        "The elephant curled its trunk around the branch.",
        "An elephant uses its trunk like a flexible nose.",
        "The young elephant waved its trunk at the crowd.",
        "Its long nose, the trunk, lets the elephant drink.",
    ]
    trunk_tree = [
        "The main stem of the tree is a woody trunk.",
        "Moss grew on the woody trunk of the tree.",
        "The trunk of the oak tree was two meters wide.",
        "Rings in the woody trunk record the age of the tree.",
    ]
    trunk_car = [
        "She loaded the luggage into the trunk of the car.",
        "The car has a roomy trunk for luggage.",
        "He locked the spare wheel in the trunk of his car.",
    ]
    scale_fish = [
        "Each bony scale on the fish reflected the light.",
        "A fish scale is a thin plate covering the skin.",
        "The skin of the fish was covered with scale after scale.",
        "One silvery scale fell from the skin of the fish.",
    ]
    scale_weigh = [
        "The butcher placed the meat on the weighing scale.",
        "A laboratory scale is an instrument for weighing samples.",
        "She set the objects on the scale for weighing.",
    ]
    mane_horse = [
        "The mane fluttered along the neck of the galloping horse.",
        "She combed the long hair of the horse's mane.",
        "The horse tossed its neck and its mane flew.",
        "Braiding the mane kept the hair off the horse's neck.",
    ]
    mane_lion = [
        "The male lion's mane framed the hair around his head.",
        "A heavy mane marks a healthy male lion.",
        "The lion shook the dark growth of hair called a mane.",
        "Around the head of the male lion grew a thick mane.",
    ]
    for s in bark_tree:
        big.append(case(s, "bark", bark, 0))
    for s in bark_dog:
        big.append(case(s, "bark", bark, 1))
    for s in trunk_elephant:
        big.append(case(s, "trunk", trunk, 0))
    for s in trunk_tree:
        big.append(case(s, "trunk", trunk, 1))
    for s in trunk_car:
        big.append(case(s, "trunk", trunk, 2))
    for s in scale_fish:
        big.append(case(s, "scale", scale, 0))
    for s in scale_weigh:
        big.append(case(s, "scale", scale, 1))
    for s in mane_horse:
        big.append(case(s, "mane", mane, 0))
    for s in mane_lion:
        big.append(case(s, "mane", mane, 1))
    # Hard cases: no overlap with either gloss; ties resolve to the first
    # gloss, so a non-zero label is unreachable for the baseline.
    hard = [
        case("It startled everyone nearby.", "bark", bark, 1),
        case("They examined it closely.", "trunk", trunk, 2),
        case("It was quite old.", "scale", scale, 1),
        case("Everyone admired it.", "mane", mane, 1),
    ]
    big.extend(hard)
    assert len(big) == 41, len(big)
    with open(os.path.join(OUT, "wsd_cases_41.jsonl"), "w") as f:
        for c in big:
            f.write(json.dumps(c) + "\n")

    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
