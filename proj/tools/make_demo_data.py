#!/usr/bin/env python3
"""Regenerates the demo dataset under data/demo. Output is seeded and stable."""

import csv
import json
import random
from datetime import datetime, timedelta, timezone
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "data" / "demo"

CATS = ["anger", "anticipation", "disgust", "fear", "joy",
        "sadness", "surprise", "trust", "negative", "positive"]

# word -> associated categories, in the layout of the NRC word-level lexicon
LEXICON = {
    "happy": "anticipation joy trust positive",
    "win": "anticipation joy surprise trust positive",
    "victory": "anticipation joy surprise trust positive",
    "champion": "anticipation joy trust positive",
    "brilliant": "anticipation joy trust positive",
    "great": "joy trust positive",
    "love": "joy positive",
    "proud": "anticipation joy trust positive",
    "celebrate": "anticipation joy surprise trust positive",
    "hero": "anticipation joy surprise trust positive",
    "superb": "joy trust positive",
    "confident": "joy trust positive",
    "trust": "trust positive",
    "faith": "anticipation joy trust positive",
    "believe": "trust positive",
    "hope": "anticipation joy surprise trust positive",
    "excited": "anticipation joy surprise positive",
    "waiting": "anticipation",
    "tomorrow": "anticipation",
    "ready": "anticipation positive",
    "fight": "anger fear negative",
    "pressure": "negative",
    "nervous": "anticipation fear negative",
    "fear": "anger fear negative",
    "scared": "fear negative",
    "worry": "anticipation fear sadness negative",
    "danger": "fear negative",
    "lose": "anger disgust fear sadness surprise negative",
    "lost": "sadness negative",
    "defeat": "negative",
    "disappointed": "anger disgust sadness negative",
    "sad": "sadness negative",
    "cry": "sadness negative",
    "heartbreak": "sadness negative",
    "shame": "disgust fear sadness negative",
    "angry": "anger disgust negative",
    "rage": "anger negative",
    "terrible": "anger disgust fear sadness negative",
    "awful": "anger disgust fear sadness negative",
    "disgusting": "anger disgust fear negative",
    "pathetic": "disgust sadness negative",
    "blame": "anger disgust negative",
    "shock": "anger fear negative",
    "unexpected": "anticipation fear joy surprise negative positive",
    "wow": "surprise positive",
    "amazing": "joy surprise positive",
    "incredible": "surprise positive",
    "sudden": "surprise",
    "good": "anticipation joy surprise trust positive",
    "best": "joy trust positive",
    "king": "positive",
    "master": "positive trust",
    "class": "positive",
    "steady": "trust positive",
    "calm": "positive",
    "century": "positive joy",
    "failure": "disgust fear sadness negative",
    "poor": "anger disgust fear sadness negative",
    "drop": "negative",
    "missed": "sadness negative",
    "luck": "anticipation joy surprise positive",
    "pray": "anticipation fear joy surprise trust positive",
    "match": "",
    "cricket": "",
    "bat": "",
}

EVENTS = [
    ("INDvsPAK", 1, "2017-06-04T09:30:00Z", "2017-06-04T17:15:00Z", "win"),
    ("INDvsSL", 2, "2017-06-08T09:30:00Z", "2017-06-08T17:00:00Z", "lose"),
    ("INDvsSA", 3, "2017-06-11T09:30:00Z", "2017-06-11T15:45:00Z", "win"),
    ("INDvsBAN", 4, "2017-06-15T09:30:00Z", "2017-06-15T16:30:00Z", "win"),
    ("INDvsPAK", 5, "2017-06-18T09:30:00Z", "2017-06-18T16:45:00Z", "lose"),
]

PLAYERS = [
    {"name": "Virat Kohli", "acronym": "VK",
     "keywords": ["virat", "kohli", "imVkohli", "#ViratKohli", "viratkohli"],
     "brands": ["MRF", "PEP", "PNB", "AUDI"],
     "performance": {"M1": "81", "M2": "0", "M3": "76", "M4": "96", "M5": "5"}},
    {"name": "Rohit Sharma", "acronym": "RS",
     "keywords": ["rohit", "hitman", "ImRo45", "rohitsharma"],
     "brands": ["CEAT", "MAGGI"],
     "performance": {"M1": "91", "M2": "78", "M3": "12", "M4": "123", "M5": "0"}},
    {"name": "Shikhar Dhawan", "acronym": "SD",
     "keywords": ["shikhar", "dhawan", "SDhawan25", "gabbar"],
     "brands": ["CANARA", "BIGBZR"],
     "performance": {"M1": "68", "M2": "125", "M3": "78", "M4": "46", "M5": "21"}},
    {"name": "MS Dhoni", "acronym": "MSD",
     "keywords": ["dhoni", "msdhoni", "mahi"],
     "brands": [],
     "performance": {"M1": "DNB", "M2": "63", "M3": "DNB", "M4": "DNB", "M5": "4"}},
]

# Closing prices: Jun 2, 5, 7, 8, 12, 14, 15, 19.
PRICE_DATES = ["2017-06-02", "2017-06-05", "2017-06-07", "2017-06-08",
               "2017-06-12", "2017-06-14", "2017-06-15", "2017-06-19"]
PRICES = {
    "MRF": ["67716", "68820.5", "68986", "72901.20313", "73331.60156",
            "71102.10156", "71978.10156", "71760.20313"],
    "PEP": ["117.669998", "117.699997", "117.050003", "115.940002", "116.230003",
            "117.370003", "116.860001", "117.290001"],
    "PNB": ["153.050003", "149.5", "152.350006", "152.149994", "148.399994",
            "152", "147.649994", "147.25"],
    "AUDI": ["675.5", "680", "685.099976", "682", "707", "705", "711.349976", "714.599976"],
    "CEAT": ["1860.404297", "1880.828125", "1883.064209", "1896.23291", "1891.114624",
             "1846.987305", "1849.869507", "1842.564453"],
    "MAGGI": ["6714.200195", "6677.200195", "6669.799805", "6667.5", "6660.149902",
              "6684.350098", "6759.75", "6738.350098"],
    "CANARA": ["360.049988", "362.649994", "362.700012", "360.450012", "346",
               "355.350006", "352.049988", "355.450012"],
    "BIGBZR": ["329.899994", "346.399994", "382.600006", "393.350006", "394.649994",
               "388.549988", "373.700012", "393.149994"],
}

POSITIVE = ["happy", "win", "victory", "champion", "brilliant", "great", "love", "proud",
            "celebrate", "hero", "superb", "confident", "trust", "faith", "believe", "best",
            "king", "master", "class", "steady", "century", "amazing", "good"]
NEGATIVE = ["lose", "lost", "defeat", "disappointed", "sad", "cry", "heartbreak", "shame",
            "angry", "rage", "terrible", "awful", "pathetic", "blame", "failure", "poor",
            "drop", "missed", "shock"]
ANTICIPATION = ["hope", "excited", "waiting", "tomorrow", "ready", "nervous", "pray", "luck",
                "pressure", "worry", "fight", "believe", "faith"]
FILLER = ["the", "is", "a", "for", "and", "today", "team", "match", "cricket", "bat",
          "what", "innings", "again", "this", "so", "very", "knock"]
DECOR = ["https://t.co/{}", "#CT17", "#INDvsPAK", "ICYMI", "@BCCI", "wowww", "soooo",
         "#ChampionsTrophy", "RT", "www.cricbuzz.com/live"]


def iso(t):
    return t.strftime("%Y-%m-%dT%H:%M:%SZ")


def player_mention(rng, player):
    k = rng.choice(player["keywords"])
    if k.startswith("#"):
        return k
    return rng.choice([k, k.capitalize(), "@" + k, "#" + k])


def tweet_text(rng, players, phase, outcome, perf_good):
    words = []
    if phase == "pre":
        pool = ANTICIPATION * 2 + POSITIVE + NEGATIVE[:4]
    else:
        good = outcome == "win" or perf_good
        pool = POSITIVE * 3 + NEGATIVE if good else NEGATIVE * 3 + POSITIVE
    for _ in range(rng.randint(2, 5)):
        words.append(rng.choice(pool))
    for _ in range(rng.randint(1, 4)):
        words.append(rng.choice(FILLER))
    for p in players:
        words.append(player_mention(rng, p))
    rng.shuffle(words)
    if rng.random() < 0.5:
        d = rng.choice(DECOR)
        words.insert(rng.randint(0, len(words)), d.format(rng.randrange(10**6, 10**7)))
    return " ".join(words)


def main():
    rng = random.Random(2017)
    OUT.mkdir(parents=True, exist_ok=True)

    with open(OUT / "lexicon.tsv", "w") as f:
        for word in sorted(LEXICON):
            assoc = set(LEXICON[word].split())
            for cat in CATS:
                f.write(f"{word}\t{cat}\t{1 if cat in assoc else 0}\n")

    events = []
    for label, ordinal, start, end, outcome in EVENTS:
        events.append({"label": label, "ordinal": ordinal, "start": start, "end": end,
                       "outcome": outcome})
    (OUT / "matches.json").write_text(json.dumps({"events": events}, indent=2) + "\n")
    (OUT / "players.json").write_text(json.dumps({"players": PLAYERS}, indent=2) + "\n")

    with open(OUT / "prices.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["date", "symbol", "close"])
        for symbol, closes in PRICES.items():
            for d, c in zip(PRICE_DATES, closes):
                w.writerow([d, symbol, c])

    with open(OUT / "popularity.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["date", "subject", "value"])
        base = {"VK": 70, "RS": 35, "SD": 30, "MSD": 45}
        for acronym, level in base.items():
            for day in range(1, 21):
                value = max(0, min(100, level + rng.randint(-15, 25)))
                w.writerow([f"2017-06-{day:02d}", acronym, value])

    tweets = []
    serial = 880000000000000000
    for label, ordinal, start, end, outcome in EVENTS:
        t0 = datetime.strptime(start, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)
        t1 = datetime.strptime(end, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)
        for phase in ("pre", "post", "during"):
            for _ in range(rng.randint(90, 140)):
                if phase == "pre":
                    t = t0 - timedelta(seconds=rng.randint(1, 4 * 3600))
                elif phase == "post":
                    t = t1 + timedelta(seconds=rng.randint(1, 4 * 3600))
                else:
                    t = t0 + timedelta(seconds=rng.randint(0, int((t1 - t0).total_seconds())))
                k = 1 if rng.random() < 0.85 else 2
                chosen = rng.sample(PLAYERS, k) if rng.random() < 0.95 else []
                perf = chosen[0]["performance"][f"M{ordinal}"] if chosen else "0"
                perf_good = perf.isdigit() and int(perf) >= 50
                serial += rng.randint(1, 5000)
                tweets.append({"id": str(serial), "created_at": iso(t),
                               "text": tweet_text(rng, chosen, phase, outcome, perf_good)})
    rng.shuffle(tweets)
    with open(OUT / "tweets.jsonl", "w") as f:
        for tw in tweets:
            f.write(json.dumps(tw, ensure_ascii=False) + "\n")

    (OUT / "run.cfg").write_text(
        "# Demo run over the 2017 tournament sample\n"
        "tweets = tweets.jsonl\n"
        "lexicon = lexicon.tsv\n"
        "stopwords = ../stopwords.txt\n"
        "acronyms = ../acronyms.tsv\n"
        "extraneous = ../extraneous.txt\n"
        "players = players.json\n"
        "matches = matches.json\n"
        "prices = prices.csv\n"
        "popularity = popularity.csv\n"
        "window_hours = 4\n"
        "mode = both\n"
        "out_format = md\n"
        "out_dir = ../../out\n")


if __name__ == "__main__":
    main()
