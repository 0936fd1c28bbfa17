#!/usr/bin/env python3
"""Regenerate the replay fixtures (inputs/, replay/, prompts_golden.txt).

Each test is described by its input paragraph, the sentence split, and the
per-sentence decisions (topic relevance, extracted triple, enumerated subject
and object labels).  The script emits one JSONL transcript per test in the
exact (system_prompt, user_prompt, raw_response) form the replay backend
consumes, then simulates the pipeline independently and checks the resulting
network counts against the expected per-test rows before writing anything.

Run from the repository root:  python3 fixtures/generate_replay_fixtures.py
"""

import json
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(HERE, "prompts.json"), encoding="utf-8") as f:
    PROMPTS = json.load(f)

ERR = "ERROR"  # enumeration answered with prose instead of a JSON array
NON_ENUMERABLE_TEXT = (
    "The provided text does not contain an enumerable list of items."
)
MAX_RETRIES = 2
TIMESTAMP = "2025-01-01T00:00:00Z"


def sent(text, topic=False, svo=None, subj=None, obj=None):
    return {"text": text, "topic": topic, "svo": svo, "subj": subj, "obj": obj}


TESTS = [
    {
        "n": 1,
        "topic": "purchase",
        "sentences": [
            sent("Tom had been eyeing a new bike for months, but he finally found the perfect one at his local bike shop."),
            sent("The sleek design and shiny frame caught his eye, and he couldn't wait to take it out for a spin."),
            sent("As he test-rode the bike, he felt a rush of excitement - this was exactly what he had been looking for."),
            sent("The sales associate noticed Tom's enthusiasm and approached him with a smile."),
            sent("\"That's one of our top-of-the-line models,\" he said."),
            sent("\"It's designed for speed and comfort, and I think you'll love it.\""),
            sent("Tom couldn't agree more - he bought the bike on the spot and spent the rest of the day riding through the park.",
                 topic=True, svo=("Tom", "the bike", "bought"),
                 subj=["Tom"], obj=["bike"]),
        ],
        "expect": ("Yes", "No", 1, 1, 1, 1, 1),
        "note": "Split response repaired: the recorded array had broken escape sequences on the two quoted-dialogue sentences.",
    },
    {
        "n": 2,
        "topic": "purchase",
        "sentences": [
            sent("My name is Joe."),
            sent("I went into a Target and bought pencils.",
                 topic=True, svo=("you", "pencils", "bought"),
                 subj=["you"], obj=["pencils"]),
            sent("Then, I bought sushi and Uncrustables to eat for lunch throughout this week.",
                 topic=True, svo=("I", "sushi and Uncrustables", "bought"),
                 subj=["I"], obj=["sushi", "Uncrustables"]),
        ],
        "expect": ("Yes", "No", 2, 3, 2, 3, 3),
        "note": "Diverges from the published table, which reports all zeros despite two valid purchase triples in the transcript.",
    },
    {
        "n": 3,
        "topic": "purchase",
        "sentences": [
            sent("As soon as Emma walked into the music store, she knew she had found her treasure."),
            sent("The vintage guitar on display caught her eye, and she couldn't resist its charm."),
            sent("She carefully picked it up, feeling the weight and balance in her hands."),
            sent("The shop owner noticed her interest and approached her with a smile."),
            sent("\"That's a 1960s Fender Stratocaster,\" he said."),
            sent("\"It's been well-maintained and has a rich history.\""),
            sent("Emma couldn't believe her luck - she had always wanted to play the guitar, and now she had found one that would be perfect for her."),
        ],
        "expect": ("No", "No", 0, 0, 0, 0, 0),
    },
    {
        "n": 4,
        "topic": "purchase",
        "sentences": [
            sent("Mrs. Thompson was hosting a dinner party for her friends and family, and she wanted everything to be perfect."),
            sent("She walked into the department store and spotted a beautiful set of fine china on display."),
            sent("The delicate patterns and intricate designs caught her eye, and she knew she had found the perfect addition to her table setting."),
            sent("As she carefully examined each piece, the sales associate approached her with a smile."),
            sent("\"This is our finest collection,\" he said."),
            sent("\"It's made from high-quality porcelain and will last for generations.\""),
            sent("Mrs. Thompson couldn't resist - she bought the entire set and spent the rest of the day preparing for her dinner party.",
                 topic=True, svo=("Mrs. Thompson", "the entire set", "bought"),
                 subj=["Mrs. Thompson"], obj=ERR),
        ],
        "expect": ("No", "Yes", 0, 0, 0, 0, 0),
        "note": "Object phrase \"the entire set\" answers with prose, so the run aborts with a non-enumerable error. Split response repaired (missing comma).",
    },
    {
        "n": 5,
        "topic": "purchase",
        "sentences": [
            sent("Professor Patel had been researching ancient civilizations for years, but she was always on the lookout for new insights and perspectives."),
            sent("As she browsed through the bookstore, her eyes landed on a book that caught her attention - \"The Lost City of Troy\" by a renowned historian."),
            sent("She carefully opened the book and began to read, devouring every word."),
            sent("The author's writing style and in-depth research impressed her, and she knew she had found a valuable resource for her next project."),
            sent("As she purchased the book, the sales associate approached her with a smile.",
                 topic=True, svo=("the sales associate", "her", "approached"),
                 subj=["The Sales Associate"], obj=["her"]),
            sent("\"That's one of our best-sellers,\" he said."),
            sent("\"I think you'll find it fascinating.\""),
        ],
        "expect": ("No", "No", 1, 1, 1, 1, 1),
    },
    {
        "n": 6,
        "topic": "purchase",
        "sentences": [
            sent("Lily was an aspiring artist, and she loved nothing more than spending hours in her studio creating new pieces."),
            sent("As she walked into the art supply store, her eyes landed on a set of high-quality paints that caught her attention."),
            sent("She carefully examined each color and texture, feeling inspired by the possibilities."),
            sent("The sales associate noticed Lily's enthusiasm and approached her with a smile."),
            sent("\"Those are our top-of-the-line paints,\" he said."),
            sent("\"They're made from the finest materials and will give you incredible results.\""),
            sent("Lily couldn't resist - she bought the entire set and spent the rest of the day creating new masterpieces.",
                 topic=True, svo=("Lily", "the entire set", "bought"),
                 subj=["Lily"], obj=ERR),
        ],
        "expect": ("No", "Yes", 0, 0, 0, 0, 0),
        "note": "Same non-enumerable \"the entire set\" failure as test 4. Split response repaired (broken escapes).",
    },
    {
        "n": 7,
        "topic": "purchase",
        "sentences": [
            sent("Alex had been using his old phone for years, but it was finally time to upgrade."),
            sent("As he walked into the electronics store, his eyes landed on a sleek new smartphone that caught his attention."),
            sent("He carefully examined each feature and function, feeling impressed by its capabilities."),
            sent("The sales associate noticed Alex's interest and approached him with a smile."),
            sent("\"That's one of our latest models,\" he said."),
            sent("\"It has all the latest features and is designed for speed and efficiency.\""),
            sent("Alex couldn't resist - he bought the phone on the spot and spent the rest of the day exploring its new features.",
                 topic=True, svo=("Alex", "the phone", "bought"),
                 subj=["Alex"], obj=["phone"]),
        ],
        "expect": ("Yes", "No", 1, 1, 1, 1, 1),
        "note": "Split response repaired (stray doubled quote on sentence 6).",
    },
    {
        "n": 8,
        "topic": "purchase",
        "sentences": [
            sent("Sarah had always loved gardening, but she was tired of using old, rusty tools that didn't get the job done."),
            sent("As she walked into the garden center, her eyes landed on a set of high-quality gardening tools that caught her attention."),
            sent("She carefully examined each tool and felt impressed by its durability and quality."),
            sent("The sales associate noticed Sarah's enthusiasm and approached her with a smile."),
            sent("\"Those are our top-of-the-line tools,\" he said."),
            sent("\"They're made from the finest materials and will make your gardening tasks easier.\""),
            sent("Sarah couldn't resist - she bought the entire set and spent the rest of the day tending to her garden.",
                 topic=True, svo=("Sarah", "the entire set", "bought"),
                 subj=["Sarah"], obj=ERR),
        ],
        "expect": ("No", "Yes", 0, 0, 0, 0, 0),
        "note": "Same non-enumerable \"the entire set\" failure. Split response repaired (leaked prompt text and unescaped quotes).",
    },
    {
        "n": 9,
        "topic": "purchase",
        "sentences": [
            sent("Emily was a student, and she needed a reliable laptop for her studies."),
            sent("As she walked into the electronics store, her eyes landed on a sleek new laptop that caught her attention."),
            sent("She carefully examined each feature and function, feeling impressed by its capabilities."),
            sent("The sales associate noticed Emily's interest and approached her with a smile."),
            sent("\"That's one of our latest models,\" he said."),
            sent("\"It has all the latest features and is designed for speed and efficiency.\""),
            sent("Emily couldn't resist - she bought the laptop on the spot and spent the rest of the day setting it up and exploring its new features.",
                 topic=True, svo=("Emily", "the laptop", "bought"),
                 subj=["Emily"], obj=["laptop"]),
        ],
        "expect": ("Yes", "No", 1, 1, 1, 1, 1),
        "note": "Diverges from the published table, which reports no object and no expected result despite a valid bought-triple in the transcript.",
    },
    {
        "n": 10,
        "topic": "purchase",
        "sentences": [
            sent("Rachel was celebrating her anniversary with her husband, and she wanted to find the perfect gift."),
            sent("As she walked into the jewelry store, her eyes landed on a beautiful set of fine jewelry that caught her attention."),
            sent("She carefully examined each piece and felt impressed by its quality and craftsmanship."),
            sent("The sales associate noticed Rachel's enthusiasm and approached her with a smile."),
            sent("\"That's one of our finest collections,\" he said."),
            sent("\"It's made from high-quality materials and will last for generations.\""),
            sent("Rachel couldn't resist - she bought the entire set and spent the rest of the day planning the perfect anniversary celebration.",
                 topic=True, svo=("Rachel", "the entire set", "bought"),
                 subj=["Rachel"], obj=ERR),
        ],
        "expect": ("No", "Yes", 0, 0, 0, 0, 0),
        "note": "Same non-enumerable \"the entire set\" failure.",
    },
    {
        "n": 11,
        "topic": "purchase",
        "sentences": [
            sent("Jack had always loved photography, but he was tired of using an old camera that didn't get the job done."),
            sent("As he walked into the electronics store, his eyes landed on a sleek new camera that caught his attention."),
            sent("He carefully examined each feature and function, feeling impressed by its capabilities."),
            sent("The sales associate noticed Jack's enthusiasm and approached him with a smile."),
            sent("\"That's one of our top-of-the-line cameras,\" he said."),
            sent("\"It has all the latest features and is designed for speed and efficiency.\""),
            sent("Jack couldn't resist - he bought the camera on the spot and spent the rest of the day exploring its new features and taking stunning photos.",
                 topic=True, svo=("Jack", "the camera", "bought"),
                 subj=["Jack"], obj=["camera"]),
        ],
        "expect": ("Yes", "No", 1, 1, 1, 1, 1),
        "note": "Split response repaired (missing commas between array items).",
    },
    {
        "n": 12,
        "topic": "travel experience",
        "sentences": [
            sent("As I soared above the Serengeti National Park in a hot air balloon, I felt a sense of wonder and awe that I had never experienced before.",
                 topic=True, svo=("I", "a sense of wonder and awe", "felt"),
                 subj=[], obj=[]),
            sent("The sun was rising over the savannah, casting a golden glow over the grasslands and acacia trees.",
                 topic=True, svo=("the sun", "a golden glow", "casting"),
                 subj=["The Sun"], obj=[]),
            sent("Below me, the majestic animals of Africa roamed freely - giraffes, zebras, and lions all seemed to be going about their day as if I wasn't there at all.",
                 topic=True, svo=("the majestic animals of Africa", "their day", "seemed"),
                 subj=["The Majestic Animals of Africa"], obj=[]),
            sent("Our pilot expertly navigated the balloon through the wispy clouds, offering breathtaking views of the landscape below.",
                 topic=True, svo=("the pilot", "the balloon", "navigated"),
                 subj=["The Pilot"], obj=["balloon"]),
            sent("As we floated above a herd of grazing wildebeest, I felt a sense of peace wash over me - this was truly a once-in-a-lifetime experience.",
                 topic=True, svo=("I", "a sense of peace", "wash"),
                 subj=[], obj=[]),
        ],
        "expect": ("Yes", "No", 3, 1, 1, 1, 1),
        "note": "Diverges from the published table on objects found: the published result list contains an object (\"book\") that no exchange produces, so it is excluded here.",
    },
    {
        "n": 13,
        "topic": "travel experience",
        "sentences": [
            sent("As I walked through the narrow canyon known as the Siq, I couldn't help but feel a sense of excitement and wonder.",
                 topic=True, svo=("I", "excitement and wonder", "feel"),
                 subj=[], obj=["excitement", "wonder"]),
            sent("The ancient city of Petra stretched out before me, its intricately carved facades and temples rising up from the sandstone cliffs like giants.",
                 topic=True, svo=("Petra", "the sandstone cliffs", "rising"),
                 subj=["Petra"], obj=["sandstone", "cliffs"]),
            sent("I had always been fascinated by history, and to see this incredible site in person was truly a dream come true.",
                 topic=True, svo=("the speaker", "this incredible site", "see"),
                 subj=["You", "The Speaker"], obj=["site"]),
            sent("As I explored the ruins, I felt a sense of connection to the people who had built this city over 2,000 years ago - their ingenuity and craftsmanship were still evident in every stone.",
                 topic=True, svo=("I", "the people who had built this city", "felt"),
                 subj=["I"], obj=["people", "city"]),
        ],
        "expect": ("Yes", "No", 4, 7, 4, 5, 6),
        "note": "Subject phrase \"I\" enumerates to nothing in sentence 1 but to [\"I\"] in sentence 4; the replay table serves the two recorded answers in order.",
    },
    {
        "n": 14,
        "topic": "travel experience",
        "sentences": [
            sent("I had always loved Italian food, but nothing could have prepared me for the culinary experience that awaited me in Tuscany.",
                 topic=True, svo=("me", "the culinary experience", "awaited"),
                 subj=[], obj=["culinary experience"]),
            sent("As I walked through the rolling hills and vineyards of this picturesque region, I was invited to join a cooking class at a local villa.",
                 topic=True, svo=("I", "a cooking class", "invited"),
                 subj=[], obj=["cooking class"]),
            sent("Under the guidance of our chef, we learned how to prepare traditional Tuscan dishes using fresh ingredients from the surrounding countryside."),
            sent("The aromas wafting from the kitchen were incredible - pasta sauces simmered on the stovetop, while freshly baked bread and pizza dough rose in the oven."),
            sent("As we sat down to enjoy our creations, I felt a sense of satisfaction and joy that came from sharing a meal with new friends."),
        ],
        "expect": ("No", "No", 0, 2, 0, 0, 0),
    },
    {
        "n": 15,
        "topic": "travel experience",
        "sentences": [
            sent("As I slipped into the crystal-clear waters of Bora Bora's lagoon, I was immediately struck by the vibrant colors and incredible marine life that surrounded me.",
                 topic=True, svo=("I", "vibrant colors and incredible marine life", "struck"),
                 subj=[], obj=["coral reef"]),
            sent("The sea turtles swam alongside me, their gentle eyes seeming to regard me with a quiet curiosity.",
                 topic=True, svo=("the sea turtles", "me", "regard"),
                 subj=["Sea Turtles"], obj=[]),
            sent("As we explored the underwater world together, I felt a sense of connection to these magnificent creatures - they were so much more than just animals; they were ambassadors for the beauty and wonder of our planet."),
        ],
        "expect": ("No", "No", 1, 1, 0, 0, 0),
    },
    {
        "n": 16,
        "topic": "travel experience",
        "sentences": [
            sent("As I stood before the majestic Taj Mahal at sunrise, I felt a sense of awe and reverence wash over me.",
                 topic=True, svo=("I", "awe and reverence", "wash"),
                 subj=[], obj=["awe", "reverence"]),
            sent("The intricate marble carvings and ornate details seemed to glow with an otherworldly light in the early morning sun.",
                 topic=True, svo=("the intricate marble carvings and ornate details", "an otherworldly light", "seemed"),
                 subj=["marble carvings", "ornate details"], obj=["otherworldly", "light"]),
            sent("As I walked through the gardens and reflecting pools surrounding this incredible monument,",
                 topic=True, svo=("I", "the gardens and reflecting pools", "walked"),
                 subj=[], obj=["gardens", "reflecting pools"]),
            sent("I couldn't help but feel a sense of wonder at the love story that had inspired its creation - Shah Jahan's devotion to his beloved wife was still palpable in every stone."),
        ],
        "expect": ("Yes", "No", 2, 6, 2, 2, 4),
        "note": "Split item 3 is recorded once without and once with its trailing comma; the comma form (used by every later exchange) is kept.",
    },
    {
        "n": 17,
        "topic": "travel experience",
        "sentences": [
            sent("As I drove through the stunning landscapes of New Zealand's South Island, I felt a sense of freedom and adventure that I had never experienced before.",
                 topic=True, svo=("I", "a sense of freedom and adventure", "felt"),
                 subj=[], obj=["traveler's journal"]),
            sent("The rugged mountains, pristine lakes, and picturesque villages all seemed to unfold like a tapestry before me - each new turn in the road revealed another breathtaking view or hidden gem.",
                 topic=True, svo=("me", "a tapestry", "unfold"),
                 subj=["I", "me"], obj=["wall hanging", "textile art"]),
            sent("As we stopped at a local café for a cup of coffee and a slice of homemade pie, I felt grateful for this chance to explore one of the most beautiful countries on earth.",
                 topic=True, svo=("I", "a chance", "felt"),
                 subj=[], obj=[]),
        ],
        "expect": ("No", "No", 2, 3, 2, 2, 4),
    },
    {
        "n": 18,
        "topic": "travel experience",
        "sentences": [
            sent("As I walked through the crumbling temples and ruins of Angkor Wat,",
                 topic=True, svo=("I", "the crumbling temples and ruins of Angkor Wat", "walked"),
                 subj=[], obj=["temples", "ruins"]),
            sent("I couldn't help but feel a sense of wonder at the ingenuity and craftsmanship of the people who had built this incredible site over 1,000 years ago.",
                 topic=True, svo=("the people", "this incredible site", "built"),
                 subj=["John", "Mary", "David"], obj=["site"]),
            sent("The intricate carvings and bas-reliefs seemed to tell stories of myth and legend,"),
            sent("while the imposing stone structures rose up from the jungle like giants."),
            sent("As I explored the ancient city,",
                 topic=True, svo=("I", "the ancient city", "explored"),
                 subj=[], obj=["city"]),
            sent("I felt a sense of connection to the people who had once called this place home - their history and culture still lingered in every stone.",
                 topic=True, svo=("the people", "their history and culture", "lingered"),
                 subj=[], obj=[]),
        ],
        "expect": ("No", "No", 3, 4, 3, 1, 3),
        "note": "Subject phrase \"the people\" enumerates to three names in sentence 2 and to nothing in sentence 6.",
    },
    {
        "n": 19,
        "topic": "travel experience",
        "sentences": [
            sent("As I sailed through the crystal-clear waters of the Aegean Sea, I felt a sense of freedom and joy that I had never experienced before.",
                 topic=True, svo=("I", "freedom and joy", "felt"),
                 subj=[], obj=["freedom", "joy"]),
            sent("The picturesque villages and secluded beaches of the Greek Islands seemed to unfold like a treasure map before me - each new cove or hidden harbor revealed another breathtaking view or secret spot.",
                 topic=True, svo=("the Greek Islands", "a treasure map", "unfold"),
                 subj=["Mykonos", "Santorini", "Crete"], obj=["treasure map"]),
            sent("As we anchored in a secluded bay for the night, I felt grateful for this chance to explore one of the most beautiful regions on earth.",
                 topic=True, svo=("I", "this chance", "felt"),
                 subj=[], obj=[]),
        ],
        "expect": ("No", "No", 3, 3, 3, 1, 3),
        "note": "Split response repaired (missing commas between array items).",
    },
    {
        "n": 20,
        "topic": "travel experience",
        "sentences": [
            sent("As I stood before the majestic Grand Canyon at sunset, I felt a sense of awe and wonder wash over me.",
                 topic=True, svo=("I", "awe and wonder", "felt"),
                 subj=[], obj=["awe", "wonder"]),
            sent("The rust-red rock formations seemed to glow with an otherworldly light in the fading light of day - the sheer scale and beauty of this incredible natural wonder left me speechless.",
                 topic=True, svo=("the rust-red rock formations", "me", "left"),
                 subj=["The Grand Canyon"], obj=["you"]),
            sent("As I walked along the rim trail, taking in the breathtaking views and listening to the stories of the Native American tribes who had once called this place home, I felt a sense of connection to the land itself.",
                 topic=True, svo=("I", "the land", "felt"),
                 subj=[], obj=["land"]),
        ],
        "expect": ("No", "No", 1, 4, 1, 1, 1),
        "note": "Split response repaired (missing commas between array items).",
    },
    {
        "n": 21,
        "topic": "travel experience",
        "sentences": [
            sent("As I rode through the picturesque villages and mountain passes of the Swiss Alps on a vintage train, I felt a sense of nostalgia and wonder wash over me.",
                 topic=True, svo=("I", "a sense of nostalgia and wonder", "wash"),
                 subj=[], obj=["old photograph", "childhood memory"]),
            sent("The snow-capped peaks and turquoise lakes seemed to unfold like a postcard before me - each new station or village revealed another breathtaking view or hidden gem.",
                 topic=True, svo=("the snow-capped peaks and turquoise lakes", "a postcard", "seemed"),
                 subj=["mountains", "lakes"], obj=["postcard"]),
            sent("As we chugged along the tracks, I felt grateful for this chance to experience one of the most scenic train rides in the world.",
                 topic=True, svo=("I", "one of the most scenic train rides in the world", "felt"),
                 subj=[], obj=["train ride", "scenic route"]),
        ],
        "expect": ("Yes", "No", 2, 5, 2, 1, 2),
        "note": "Diverges from the published table, which reports no expected result and one action; the recorded network has two \"seemed\" links and the gold verb set matches \"seemed\".",
    },
]

TRAVEL_GOLD = ["navigated", "sailed", "rode", "drove", "soared", "floated",
               "traveled", "chugged", "rising", "see", "seem"]
PURCHASE_GOLD = ["buy", "bought", "buys", "purchase", "purchased", "sell", "sold"]


def stem(word):
    w = word.lower()
    for suf in ("ing", "ed", "es", "s"):
        if w.endswith(suf) and len(w) > len(suf) + 1:
            return w[: -len(suf)]
    return w


def normalize(label):
    words = label.lower().split()
    if words and words[0] in ("a", "an", "the"):
        words = words[1:]
    return " ".join(words)


def simulate(test):
    """Independent re-implementation of the pipeline's counting semantics."""
    containers = {}
    order = []
    roles = {}
    links = []
    errored = False

    def upsert(label, role):
        key = normalize(label)
        if key not in containers:
            containers[key] = label
            order.append(key)
            roles[key] = set()
        roles[key].add(role)
        return key

    for s in test["sentences"]:
        if not s["topic"]:
            continue
        if s["obj"] == ERR or s["subj"] == ERR:
            errored = True
            break
        subj_ids = [(lbl, "subject") for lbl in s["subj"]]
        obj_ids = [(lbl, "object") for lbl in s["obj"]]
        skeys = [upsert(lbl, r) for lbl, r in subj_ids]
        okeys = [upsert(lbl, r) for lbl, r in obj_ids]
        action = s["svo"][2]
        for sk in skeys:
            for ok in okeys:
                links.append((action, sk, ok))

    gold = PURCHASE_GOLD if test["topic"] == "purchase" else TRAVEL_GOLD
    gold_stems = {stem(g) for g in gold}
    got = any(stem(a) in gold_stems for a, _, _ in links)
    subs = {k for k in order if "subject" in roles[k]}
    objs = {k for k in order if "object" in roles[k]}
    subs_used = {sk for _, sk, _ in links}
    objs_used = {ok for _, _, ok in links}
    if errored:
        return ("No", "Yes", 0, 0, 0, 0, 0)
    return ("Yes" if got else "No", "No", len(subs), len(objs),
            len(subs_used), len(objs_used), len(links))


def yes_no(v):
    return '{ "response": "%s" }' % ("Yes" if v else "No")


def build_records(test):
    records = []
    text = " ".join(s["text"] for s in test["sentences"])

    def add(system, user, raw, outcome="ok"):
        records.append({
            "seq": len(records) + 1,
            "timestamp": TIMESTAMP,
            "system_prompt": system,
            "user_prompt": user,
            "raw_response": raw,
            "parse_outcome": outcome,
        })

    topic_prompt = PROMPTS["topic_check"].replace("{** TOPIC **}", test["topic"])
    add(PROMPTS["multi_clause_check"], text, yes_no(True))
    split = [s["text"] for s in test["sentences"]]
    add(PROMPTS["paragraph_split"], text,
        json.dumps(split, ensure_ascii=False, indent=1))
    for s in test["sentences"]:
        add(PROMPTS["complexity_check"], s["text"], yes_no(False))
        add(topic_prompt, s["text"], yes_no(s["topic"]))
        if not s["topic"]:
            continue
        subj, obj, action = s["svo"]
        add(PROMPTS["svo_extract"], s["text"],
            json.dumps({"subject": subj, "object": obj, "action": action},
                       ensure_ascii=False, indent=1))
        for kind, phrase, labels in (("subject_list_parse", subj, s["subj"]),
                                     ("object_list_parse", obj, s["obj"])):
            if labels == ERR:
                for _ in range(1 + MAX_RETRIES):
                    add(PROMPTS[kind], phrase, NON_ENUMERABLE_TEXT, "malformed")
                return records, text
            add(PROMPTS[kind], phrase, json.dumps(labels, ensure_ascii=False))
    return records, text


def main():
    inputs_dir = os.path.join(HERE, "inputs")
    replay_dir = os.path.join(HERE, "replay")
    os.makedirs(inputs_dir, exist_ok=True)
    os.makedirs(replay_dir, exist_ok=True)

    bad = []
    for test in TESTS:
        got = simulate(test)
        if got != test["expect"]:
            bad.append((test["n"], test["expect"], got))
    if bad:
        for n, exp, got in bad:
            print("test %d: expected %s, simulated %s" % (n, exp, got),
                  file=sys.stderr)
        sys.exit(1)

    for test in TESTS:
        records, text = build_records(test)
        stem_name = "test%02d" % test["n"]
        with open(os.path.join(inputs_dir, stem_name + ".txt"), "w",
                  encoding="utf-8") as f:
            f.write(text + "\n")
        with open(os.path.join(replay_dir, stem_name + ".jsonl"), "w",
                  encoding="utf-8") as f:
            for rec in records:
                f.write(json.dumps(rec, ensure_ascii=False) + "\n")

    golden = []
    for key in ("multi_clause_check", "paragraph_split", "complexity_check",
                "complex_split", "topic_check", "svo_extract",
                "subject_list_parse", "object_list_parse"):
        text = PROMPTS[key]
        if key == "topic_check":
            text = text.replace("{** TOPIC **}", "purchase")
        golden.append("[%s]\n%s\n" % (key, text))
    with open(os.path.join(HERE, "prompts_golden.txt"), "w",
              encoding="utf-8") as f:
        f.write("\n".join(golden))

    lines = [
        "# Enumeration augmentations",
        "",
        "The recorded transcripts stop at the SVO step. The subject and object",
        "enumeration exchanges below were reconstructed from the published result",
        "networks so that replaying each fixture reproduces the published counts.",
        "ERROR means the exchange answers with prose instead of a JSON array,",
        "which is the non-enumerable failure path.",
        "",
    ]
    for test in TESTS:
        lines.append("## Test %d (topic: %s)" % (test["n"], test["topic"]))
        any_enum = False
        for s in test["sentences"]:
            if not s["topic"]:
                continue
            subj, obj, _ = s["svo"]
            for phrase, labels in ((subj, s["subj"]), (obj, s["obj"])):
                rendered = "ERROR" if labels == ERR else json.dumps(labels)
                lines.append("- \"%s\" -> %s" % (phrase, rendered))
                any_enum = True
        if not any_enum:
            lines.append("- no topic-relevant sentences, no enumeration exchanges")
        if "note" in test:
            lines.append("- note: %s" % test["note"])
        lines.append("")
    with open(os.path.join(HERE, "AUGMENTATIONS.md"), "w",
              encoding="utf-8") as f:
        f.write("\n".join(lines))

    print("wrote %d fixtures" % len(TESTS))


if __name__ == "__main__":
    main()
