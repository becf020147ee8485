#!/usr/bin/env python3
"""Regenerate the frozen stemmer conformance fixture.

Assembles the test vocabulary (the algorithm's published example words, every
alphabetic token of the bundled benchmark corpus, and a curated
branch-coverage word list), runs the independent table-driven reference
stemmer from tests/porter_oracle.py over it, and freezes the expected output
pairs. The unit tests then hold the production stemmer to this file.

Usage: python scripts/freeze_stemmer_fixture.py
"""

import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))
sys.path.insert(0, str(ROOT / "src"))

from porter_oracle import oracle_stem  # noqa: E402

# Words published alongside the original algorithm description.
PUBLISHED = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical
hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate
cease controll roll oscillators generalizations
"""

# Curated branch coverage: plurals, participles, -y words, every replacement
# suffix, e-dropping, double-letter reduction, and short words.
CURATED = """
abilities accompanied accuracy achievements activity addresses adhesion
administration admirable adoption agencies aggressiveness agreement allowances
amazing analysis animals anomalies apologies appearances apples applications
apprehension arguments arrangements arrivals assumptions attendance
authorities babies bananas basics batteries beaches beautiful beginnings
believer believable belonging benches berries bicycles biology bodies books
bottles boxes branches breathing bridges brightness bubbles buildings
businesses buses butterflies cabbages cables calculations candidates
capabilities carefully carrying categories celebrations ceremonies
challenges championships changed changing chapters charges children
choices churches circumstances cities classification cleanliness clearly
collections colonies combinations comfortable communities companies
comparisons competitions completely complications computers conclusions
conditions conferences confidence connections consciousness consequences
considerations constitution contributions conversations copies corrections
countries courageous creativity cries crying curiosity customers dancing
databases deadlines decided decisions declarations definitions deliveries
demonstrations dependencies descriptions designers determination
developments dictionaries differences difficulties dignity directories
disabilities discoveries discussions diseases distances divisions doctors
dogs dolls donkeys dreams dresses dried dries driving duties dying eagerness
earliest easily eating economies edges educational effectiveness efficiencies
elections emergencies emotions employees emptiness encouragement endurance
enemies energies engagement engines enjoyment enquiries enterprises
entertainment entities entries environments equality equations equipment
essays estimates evenings everybody evidence exactly examinations examples
exceptions exchanges excited excitement exercises existence expectations
expenses experiences experiments explanations expressions extremely
facilities factories families fascinating feelings ferries fielded fighting
figures finishes fisheries fitted fixed flies floating flowers followers
foolishness forested forgiveness formations foundations freshness friendly
functions galleries gardens gatherings generosity gentleness geography
glasses governments grasses greatness groceries guesses happiness hardness
harmonies headaches healthiness hearings heaviness histories hobbies
holidays homes honesty hopes horses hospitals hotels houses hugged humanity
hurried hurries ideas identities illnesses imagination immediately
importance impressions improvements incidences industries influences
injuries inquiries inspiration installations instances institutions
instructions intentions interactions interviews introductions inventions
investigations invitations issues items journeys joyful judges judgments
juices justifications kindness kingdoms kisses kitchens knives ladies lakes
languages lately laziness leaves lectures lemons lessons letters libraries
licenses likenesses limitations lines lists literacy liveliness locations
loneliness losses lovely luckily machines magazines maintained managers
mangoes manners maps marriages matches materials mathematics meanings
measurements meetings melodies memories messages methods minutes miseries
missions mistakes mixtures modifications moments monkeys mornings mountains
movements movies mysteries names nationalities nations necessities
negotiations neighborhoods nervousness newspapers nights noises notebooks
notices novels numbers objections obligations observations occasions
occupations offices openings operations opinions opportunities oranges
orchestras organizations organizes origins outcomes outputs ovens owners
packages pages paintings palaces pancakes papers parties passages passengers
patches patients patterns payments peaches pencils performances permissions
personalities perspectives phones photographs phrases pianos pictures pieces
pinched pities places plannings plays pleasures pockets poems policies
polishes populations positions possibilities potatoes practices prayers
predictions preferences preparations presentations pressures prices
princesses principles priorities privileges probabilities problems
procedures processes productions professions programmes promises
pronunciations properties proposals protections purposes puzzles qualities
quantities quarries questions quietness rabbits races radios rains reactions
readiness realities reasons receptions recipes recognition recommendations
recordings references reflections regions registrations regulations
relationships remedies reminders removals repairs repetitions replies
reported requests requirements researches reservations resources responses
responsibilities restaurants results revisions rhythms rivers roads
robberies roses routines sadness salaries samples sandwiches satisfaction
sausages scenes schedules sciences scissors scores searches seasons
secretaries sections securities selections sentences services sessions
settings shadows shapes shelves shortness signals similarities simplicity
situations sketches skies sleeping slices smoothness societies solutions
sources speeches spellings spoonfuls stations stillness stomachs stories
strategies strengths stretches structures struggles studies subjects
substances suggestions summaries supplies surfaces surprises sweetness
syllables symbols sympathies systems tables talents teachers technologies
tendencies theories therapies thicknesses thoughts tidiness tomatoes tools
topics touches towels towers traditions trainings transactions translations
treasures treatments trees trials tries trousers trucks turkeys
understandings universities vacations valleys values varieties vegetables
vehicles versions victories villages voices volumes warnings watches
weaknesses wealthy weddings weeks wishes witnesses wonders words workers
worries writings yards years zoos
agreed agreeing argued arguing arrived arriving baked baking begged begging
bragged chatting chopped clapped controlled controlling copied copying cried
dancing dared dated dotted dragged dried dropped dropping enabled enabling
fitted fitting flagged fried gazing grabbed grinned gripped hoped hoping
hugged humming jogged judged knitting liked liking lived living loved loving
mapped moved moving named naming nodded patted petted pinned planned planning
plotted popped preferred quizzed rated rating rubbed saved saving scanned
shipped shopping sipped skated slipped smiled smiling snapped sobbed spotted
stated stating stepped stirred stopped stopping tagged tapped taped taping
timed timing tipped traded trading trapped tripped wagged waved waving
wrapped zipped
ability agility anxiety beauty bounty carry cavity charity clarity comedy
county dignity dirty dusty easy empty envy fancy forty fury glory gravity
heavy hungry hurry identity infinity injury jelly journey lady lazy levity
liberty lobby lorry lucky marry mercy messy misty muddy navy obey party
penalty pity plenty policy pony pretty purity quality quantity ready
reality safety sanity security shy sixty sorry study sunny tidy tiny
torty truly try ugly unity vanity variety worthy
agreeable amusement announcement assessment assignment attachment basement
commitment department development document element employment enjoyment
environment equipment experiment fragment garment government instrument
monument movement ornament parliament pavement payment placement
requirement segment shipment statement treatment
absorption ambition attention caution collection composition connection
creation definition description direction edition education election
emotion exception exhibition expression fiction fraction friction function
ignition imagination instruction intention invention junction location
lotion mention motion nation notion nutrition objection occupation option
portion position potion prediction production promotion proportion
protection reaction reception relation section selection session solution
station suggestion tradition tuition vacation
actor author calculator collector communicator conductor creator curator
director donor editor educator elevator emperor error executor factor
governor indicator inspector instructor investor junior major mayor mentor
minor mirror monitor motor narrator navigator operator professor projector
radiator reactor rector refrigerator sailor sculptor senator sensor
spectator sponsor supervisor surveyor tailor tractor translator tutor
vendor visitor
absence audience balance brilliance confidence difference distance
elegance eloquence essence evidence excellence existence experience
influence innocence insurance intelligence licence obedience patience
presence reference reliance residence resistance romance sentence sequence
silence substance violence
activism altruism baptism capitalism criticism cynicism egoism heroism
humanism idealism journalism magnetism mechanism optimism organism
patriotism pessimism realism socialism symbolism tourism
artist biologist chemist cyclist dentist economist florist guitarist
journalist novelist optimist pianist scientist soloist specialist tourist
violinist vocalist
becoming being coming doing going having making seeing taking
axes boxes buzzes crosses dishes foxes gases glasses kisses masses misses
passes pushes quizzes sixes waxes
added agreed ceased creed deed embedded exceed freed greed indeed need
proceeded seed speed succeed weed
ate ape are art ash awe axe bye cue die doe dye ear eat ebb egg elf elk elm
era eve ewe eye fee few fig fin fir fly foe fog fox fun fur gas gem gin gum
gut guy ham hat hay hen hip hog hop hot hub hue hug hut ice ill imp ink inn
ion ivy jab jam jar jaw jet jig job jog joy jug keg key kid kin kit lab lad
lag lap law lax leg lid lip log lot low mad map mat maw men mix mob mop mud
mug nab nag nap net new nib nil nip nod nor not now nub nun oak oar oat odd
ode off oil old one orb ore our out owl own pad pan paw pea peg pen pet pew
pie pig pin pit ply pod pop pot pry pub pup pus put rag ram ran rap rat raw
ray red rib rid rig rim rip rob rod roe rot row rub rue rug rum run rut rye
sad sag sap saw say sea set sew she shy sin sip sir sit ski sky sly sob sod
son sow soy spa spy sty sub sum sun tab tag tan tap tar tax tee ten the thy
tie tin tip toe ton top tow toy try tub tug twin two urn use van vat vet vie
vow wag war was wax way web wed wee wet why wig win wit woe wok won woo wow
yak yam yap yaw yes yet yew yin zip zoo
a i o is it at an on in up us he we me my by do so no go ox ow ah eh hi ho
"""


def corpus_words() -> set[str]:
    fixture = ROOT / "src/chronomem/data/temporal_dataset.txt"
    words = set()
    for line in fixture.read_text(encoding="utf-8").splitlines():
        if line.startswith("#") or line.startswith("["):
            continue
        for token in re.findall(r"[A-Za-z']+", line):
            token = token.strip("'").lower()
            if token:
                words.add(token)
    return words


def main() -> None:
    vocabulary = set(PUBLISHED.split()) | set(CURATED.split()) | corpus_words()
    vocabulary = sorted(w for w in vocabulary if w.isalpha() and w.isascii())
    data_dir = ROOT / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    vocab_path = data_dir / "porter_vocabulary.txt"
    expected_path = data_dir / "porter_expected.tsv"
    vocab_path.write_text("\n".join(vocabulary) + "\n", encoding="utf-8")
    with open(expected_path, "w", encoding="utf-8") as handle:
        for word in vocabulary:
            handle.write(f"{word}\t{oracle_stem(word)}\n")
    print(f"froze {len(vocabulary)} words -> {expected_path}")


if __name__ == "__main__":
    main()
