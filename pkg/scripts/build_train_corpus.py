#!/usr/bin/env python3
"""Regenerate the normalized-text training corpus used by the tests.

The corpus is spoken-form English biased toward the contexts that make the
ambiguous micro-suite decidable: dates after prepositions, fractions before
container nouns, cardinals before unit-like nouns, royal ordinals, chapter
numbers, segmented URLs, and so on.  Deterministic template expansion, no
randomness.  Run from the repo root:

    python3 scripts/build_train_corpus.py > tests/data/train_corpus.txt
"""

MONTHS = ["january", "february", "march", "april", "may", "june",
          "july", "august", "september", "october", "november", "december"]
ORDINAL_DAYS = ["first", "second", "third", "fourth", "fifth", "sixth",
                "seventh", "eighth", "ninth", "tenth", "eleventh", "twelfth",
                "thirteenth", "fourteenth", "twentieth", "twenty first"]
FRACTIONS = ["one half", "one third", "two thirds", "one quarter",
             "three quarters", "one fifth", "two fifths"]
CONTAINERS = ["cup", "cup of sugar", "cup of flour", "cup of milk",
              "teaspoon of salt", "tablespoon of butter"]
ROYALS = [
    ("henry", ["the third", "the fifth", "the eighth"]),
    ("louis", ["the fourteenth", "the sixteenth"]),
    ("william", ["the first", "the second"]),
    ("edward", ["the seventh"]),
    ("george", ["the fifth", "the sixth"]),
    ("elizabeth", ["the first", "the second"]),
]
CHAPTERS = ["one", "two", "three", "four", "five", "nine", "twelve",
            "fourteen", "twenty one", "thirty nine"]
YEARS_SPOKEN = ["nineteen seventy", "nineteen fourteen", "nineteen forty five",
                "twenty twenty", "twenty twenty two", "nineteen sixty nine",
                "eighteen twelve", "seventeen seventy six"]
BIG_CARDINALS = ["one thousand nine hundred seventy",
                 "two thousand five hundred",
                 "ten thousand one",
                 "one thousand two hundred thirty four"]
URL_PHRASES = ["we are s c dot com", "great tech dot com",
               "my email at great tech dot com", "example dot com",
               "open a i dot com", "news site dot org"]
FILLER = [
    "the weather is fine today",
    "she walked to the station in the rain",
    "please close the door quietly",
    "the committee will meet again next week",
    "he read the letter twice before answering",
    "the garden looks beautiful in spring",
    "they discussed the plan over dinner",
    "nobody knew the answer to that question",
    "the children played outside until dark",
    "i will call you when the work is done",
    "the library stays open late on fridays",
    "this road leads straight to the harbor",
]


def lines():
    out = []

    # dates in prepositional contexts; trains, meetings, departures
    for month in MONTHS:
        for day in ORDINAL_DAYS[:8]:
            out.append(f"the train leaves on {month} {day}")
            out.append(f"the meeting is on {month} {day}")
        out.append(f"independence was declared on {month} fourth")
        out.append(f"she arrives on {month} twelfth")
        out.append(f"it happened on {month} twenty first")

    # fractions before containers; recipes
    for frac in FRACTIONS:
        for cont in CONTAINERS:
            out.append(f"add {frac} {cont}")
            out.append(f"the recipe needs {frac} {cont}")
        out.append(f"mix {frac} cup of flour")
        out.append(f"what's {frac} cup plus two thirds cup")
        out.append(f"the answer is {frac}")
        out.append(f"the ratio is {frac}")
    out += ["what's one half cup plus two thirds cup"] * 8

    # bare years after "in" / "born in"; cardinals before count nouns
    for year in YEARS_SPOKEN:
        out.append(f"she was born in {year}")
        out.append(f"he was born in {year}")
        out.append(f"war broke out in {year}")
        out.append(f"the house was built in {year}")
    for card in BIG_CARDINALS:
        out.append(f"he scored {card} points in the game")
        out.append(f"the crowd numbered {card} people")
        out.append(f"it costs {card} dollars")

    # royal ordinals and numbered chapters, acts, parts
    for name, ordinals in ROYALS:
        for suffix in ordinals:
            out.append(f"{name} {suffix} ruled england")
            out.append(f"a portrait of {name} {suffix}")
    for num in CHAPTERS:
        out.append(f"chapter {num} begins here")
        out.append(f"read act {num} aloud")
        out.append(f"part {num} covers the war")
    out += ["world war two ended in nineteen forty five"] * 3

    # segmented URLs and emails
    for phrase in URL_PHRASES:
        out.append(f"it's {phrase}")
        out.append(f"visit {phrase} today")
        out.append(f"my email is {phrase}" if "at" in phrase.split() else f"go to {phrase}")

    # measures, money, times, codes
    for qty in ["seventy five", "sixty eight", "twenty one", "five"]:
        out.append(f"set the thermostat to {qty} degrees fahrenheit")
    for dist in ["five kilometers", "ten miles", "three hundred meters"]:
        out.append(f"the race is {dist} long")
    for amount in ["five dollars", "ten pounds", "one dollar", "fifty cents",
                   "five dollars thirty cents"]:
        out.append(f"it costs {amount}")
        out.append(f"the ticket was {amount}")
    for t in ["six thirty", "three o'clock", "eight o'clock", "nine fifteen",
              "seven forty five", "three thirty p m", "ten oh five a m"]:
        out.append(f"dinner is at {t}")
        out.append(f"the show starts at {t}")
    out += ["the code is c b one zero one s d"] * 4
    out += ["the postcode reads c b one zero one s d"] * 2

    # decimals and percent
    for dec in ["three point one four", "two point five", "zero point five"]:
        out.append(f"the value is {dec}")
    out.append("twenty percent of the budget is gone")
    out.append("the tank is ninety percent full")

    # plain filler to smooth the distribution
    for i in range(28):
        for f in FILLER:
            out.append(f)

    return out


if __name__ == "__main__":
    print("\n".join(lines()))
