#!/usr/bin/env python3
"""Regenerate the URL-segmentation word list shipped with the grammars.

The list is a frequency-ranked set of common English words plus web/tech
vocabulary that shows up inside domain names and email local parts.  Run
from the repo root:

    python3 scripts/build_word_list.py > src/fusenorm/grammars/data/words.tsv
"""

COMMON = """
the be to of and a in that have it for not on with he as you do at this but
his by from they we say her she or an will my one all would there their what
so up out if about who get which go me when make can like time no just him
know take people into year your good some could them see other than then now
look only come its over think also back after use two how our work first well
way even new want because any these give day most us is was are been has had
were said did having may am shall might must
man woman child world life hand part eye place case week company system
program question government number night point home water room mother area
money story fact month lot right study book job word business issue side kind
head house service friend father power hour game line end member law car city
community name president team minute idea body information parent face others
level office door health person art war history party result change morning
reason research girl guy moment air teacher force education foot boy age
policy everything process music market sense nation plan college interest
death experience effect class control care field development role student
group country problem state family school
great little own old big high different small large next early young
important few public bad same able best better sure free low late hard major
strong possible whole real american national long
ask become begin call feel find leave live mean keep let put seem help talk
turn start show hear play run move believe bring happen write provide sit
stand lose pay meet include continue set learn lead understand watch follow
stop create speak read allow add spend grow open walk win offer remember love
consider appear buy wait serve die send expect build stay fall cut reach kill
remain suggest raise pass sell require report decide pull
again always away never often once soon still today together too very yes
here there where why yet
tech great mail email web net site online shop store news blog cloud data
app apps dev code soft ware soft hard link page host server media photo video
music game games play player smart home work force point view search engine
book face gram insta tube chat snap tik tok pin share drop box drive hub lab
labs zone spot hq pro plus max mini micro mega ultra super hyper meta inter
intra trans multi auto bio eco geo neo uni air land sea sun star moon sky
blue red green black white gold silver iron steel stone rock fire ice snow
rain wind storm river lake ocean hill dale wood forest field farm garden park
bridge gate tower castle court square street road lane drive avenue
bank trade market stock fund cash coin pay pal wise card credit loan
food cafe coffee tea pizza burger bread cake sweet fresh taste cook kitchen
art design style fashion trend craft make maker build builder
care health fit fitness gym yoga run runner bike ride sport team club league
travel trip tour fly flight hotel inn stay visit guide map world global local
fast quick rapid swift easy simple smart clever bright wise true fair nice
first best top prime elite premium select choice
we are you they it one two three four five six seven eight nine ten
north south east west central mid upper lower inner outer
king queen prince duke lord lady sir
tree leaf root seed branch flower rose lily oak pine elm
cat dog bird fish bear wolf fox deer lion tiger eagle hawk owl bee ant
light dark shadow dawn dusk noon spring summer autumn winter
"""


def main():
    seen = []
    used = set()
    for word in COMMON.split():
        w = word.strip().lower()
        if w and w not in used:
            used.add(w)
            seen.append(w)
    for rank, w in enumerate(sorted(seen), 1):
        print(f"{w}\t{rank}")


if __name__ == "__main__":
    main()
