#!/usr/bin/env python3
"""Regenerate the bundled emotion keyword lexicon (src/moodmap/data/emotions.csv).

The shipped file is a curated flat word list in the same shape as the classic
"emotions.csv" keyword datasets: one lowercase word per row, each assigned to a
single category (anger, disgust, fear, joy, sadness, surprise).  Category sizes
are pinned: anger 355, disgust 70, fear 195, joy 553, sadness 274, surprise 95.
Each source list below is ordered and over-full; the generator de-duplicates,
verifies the lists are disjoint, and truncates each to its pinned size.

Run from the repo root:  python3 scripts/build_lexicon.py
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

TARGETS = {
    "anger": 355,
    "disgust": 70,
    "fear": 195,
    "joy": 553,
    "sadness": 274,
    "surprise": 95,
}

ANGER = """
anger angry angrily angered angering angers rage rages raged raging enrage enraged enrages enraging
fury furious furiously furor wrath wrathful wrathfully irate irately ire livid lividly
mad madden maddened maddening maddeningly outrage outraged outrages outrageous outrageously
annoy annoyed annoying annoyingly annoys annoyance annoyances irritate irritated irritates irritating
irritation irritations irritable irritably irritability aggravate aggravated aggravates aggravating aggravation
agitate agitated agitates agitating agitation agitator exasperate exasperated exasperates exasperating exasperation
frustrate frustrated frustrates frustrating frustratingly frustration frustrations infuriate infuriated infuriates
infuriating infuriatingly incense incensed indignant indignantly indignation resent resented resentful resentfully
resentfulness resenting resentment resentments resents bitter bitterly bitterness embittered hostile hostilely
hostility hostilities hate hated hateful hatefully hatefulness hater haters hates hating hatred
loathe loathed loathes loathing despise despised despises despising scorn scorned scornful scornfully scorning scorns
disdain disdainful disdainfully contempt contemptuous contemptuously contemptible spite spiteful spitefully spitefulness
malice malicious maliciously malevolent malevolence vindictive vindictively vindictiveness vengeful vengefully
vengefulness vengeance revenge revengeful avenge avenged avenger avenging grudge grudges grudging grudgingly
temper tempers tantrum tantrums fume fumed fumes fuming seethe seethed seethes seething
snappy snappish grumpy grumpier grumpiest grumpily grumpiness grouchy grouchiness grouch cranky crankiness
crabby surly surliness sullen sullenly sullenness huffy miffed peeved peevish peevishly peevishness
riled rile riles irked irk irks irksome vex vexed vexes vexing vexation vexatious
cross crossly crossness irascible irascibility choleric cantankerous belligerent belligerently belligerence
bellicose combative combativeness confrontational aggressive aggressively aggression aggressor antagonize antagonized
antagonizes antagonizing antagonism antagonist antagonistic quarrel quarrels quarreled quarreling quarrelsome
feud feuds feuding brawl brawls brawling clash clashed clashes clashing confront confrontation confronted confronting
rant ranted ranting rants rave raved raving berserk ballistic rampage rampaging frenzied
storming stormy berate berated berates berating scold scolded scolding scolds
rebuke rebuked rebukes rebuking reprimand reprimanded reprimands chide chided chides chiding
castigate castigated castigating denounce denounced denounces denouncing denunciation condemn condemnation condemned
condemning condemns accusation accusations accusatory accuse accused accuser accuses accusing
blame blamed blames blaming outcry defiance defiant defiantly insolence insolent
disrespect disrespected disrespectful insult insulted insulting insults offend offended offending offends
offense offenses offensive offensively provocation provocative provoke provoked provokes provoking
taunt taunted taunting taunts jeer jeered jeering jeers mock mocked mockery mocking
sneer sneered sneering sneers snarl snarled snarling snarls growl growled growling growls
glare glared glares glaring scowl scowled scowling scowls frown frowned frowning frowns
grimace grimaced grimacing exploded explosive eruption erupt erupted erupting heated heatedly
inflamed inflammatory incendiary smolder smoldering animosity animus acrimony acrimonious rancor rancorous
enmity venom venomous virulent furore gall galling nettled nettlesome miffs
spurn spurned spurning retaliate retaliated retaliating retaliation wrathfulness displeased displeasure
""".split()

DISGUST = """
disgust disgusted disgusting disgustingly disgusts revulsion revolted revolting revoltingly
repulse repulsed repulsion repulsive repulsively repugnance repugnant repellent
nausea nauseated nauseating nauseous sickening sickened sickens queasy queasiness
gross grossness vile vileness foul foulness putrid rancid rotten fetid
stench stink stinking stinks reek reeking loathsome loathsomely abhor abhorred abhorrence abhorrent abhors
odious obnoxious obnoxiously distaste distasteful distastefully unsavory unappetizing unpalatable
yuck yucky icky ugh creepy crud cruddy filth filthy squalid squalor
grotesque grimy slimy detest detestable detested detesting detests
sordid seedy sleazy nasty nastiness defile defiled contaminated tainted impurity
""".split()

FEAR = """
fear feared fearful fearfully fearfulness fearing fears fearsome afraid
scare scared scares scaring scary scarier scariest fright frighten frightened frightening frighteningly frightens
frightful frightfully terror terrors terrified terrifies terrify terrifying terrifyingly terrorize terrorized terrorizing
horror horrors horrified horrifies horrify horrifying horrifyingly horrible horribly horrendous horrendously horrid
dread dreaded dreadful dreadfully dreading dreads panic panicked panicking panicky panics
alarm alarmed alarming alarmingly alarms anxious anxiously anxiousness anxiety anxieties
worry worried worrier worries worrying worrisome uneasy uneasily uneasiness unease
nervous nervously nervousness jittery jitters edgy tense tensely tension tensions
apprehension apprehensive apprehensively trepidation foreboding ominous ominously
menace menaced menacing menacingly threat threats threaten threatened threatening threateningly threatens
intimidate intimidated intimidating intimidation daunting daunted spooked spooky spook
jumpy skittish timid timidity timidly cower cowered cowering cowers
cringe cringed cringing flinch flinched flinching recoil recoiled recoiling
shudder shuddered shuddering shudders tremble trembled trembles trembling
shiver shivered shivering shivers quake quaked quaking quiver quivered quivering
petrified petrify petrifying paralyzed paranoia paranoid phobia phobias phobic
hysteria hysterical hysterically peril perilous perilously perils
danger dangerous dangerously dangers endanger endangered hazard hazardous hazards
risky riskier unsafe insecure insecurity vulnerability vulnerable helpless helplessly helplessness defenseless
nightmare nightmares nightmarish eerie eerily sinister macabre ghastly chilling bloodcurdling
frantic frantically aghast leery wary warily wariness distrust distrustful suspicion suspicious
dismay dismayed consternation angst fret frets fretted fretful fretting
qualm qualms misgiving misgivings jeopardy doom doomed dire direly
""".split()

JOY = """
happy happily happiness happier happiest joy joys joyful joyfully joyfulness joyous joyously joyousness
glad gladly gladness gladden gladdened gladdening cheer cheered cheerful cheerfully cheerfulness cheerier cheering cheers cheery
delight delighted delightful delightfully delighting delights pleased pleasant pleasantly pleasantness pleasing pleasingly
pleasure pleasures pleasurable enjoy enjoyable enjoyed enjoying enjoyment enjoys
smile smiled smiles smiling laugh laughed laughing laughs laughter grin grinned grinning grins
elated elation euphoria euphoric ecstasy ecstatic ecstatically bliss blissful blissfully
jubilant jubilantly jubilation exuberance exuberant exuberantly exult exultant exultation exulted exulting
rejoice rejoiced rejoices rejoicing celebrate celebrated celebrates celebrating celebration celebrations celebratory
festive festivity festivities merry merrily merriment jolly jollity mirth mirthful
glee gleeful gleefully content contented contentedly contentment satisfied satisfies satisfying satisfaction
gratified gratify gratifying gratification fulfilled fulfilling fulfillment thrill thrilled thrilling thrills
excite excited excitedly excitement excites exciting eager eagerly eagerness
enthusiasm enthusiastic enthusiastically optimism optimistic optimistically upbeat buoyant buoyancy
hope hoped hopeful hopefully hopefulness hopes hoping radiance radiant radiantly
beam beamed beaming beams sunny brighten brightened brightly brightness sparkling vibrant
lively liveliness spirited peppy perky chipper bubbly playful playfully playfulness
fun amuse amused amusement amusing entertain entertained entertaining entertainment
hilarious hilariously hilarity comical funny humor humorous witty lighthearted carefree
serene serenely serenity peaceful peacefully peacefulness calm calmly calmness tranquil tranquility
relax relaxation relaxed relaxing soothe soothed soothing comfort comfortable comfortably comforted comforting
cozy warmhearted warmly warmth tender tenderly tenderness affection affectionate affectionately
love loved loves loving lovingly adorable adoration adore adored adoring
cherish cherished cherishing fond fondly fondness sweetly sweetness darling beloved caring
kind kindly kindness gentleness friendly friendliness welcoming gracious graciously
generosity generous generously thankful thankfully thankfulness grateful gratefully gratitude
appreciate appreciated appreciates appreciating appreciation appreciative blessed blessing blessings
lucky luckily fortunate fortunately prosper prosperity prosperous prospering thrive thrived thriving
flourish flourished flourishing success successes successful successfully succeed succeeded succeeding
triumph triumphant triumphantly triumphs victories victorious victory win winner winning wins
achieve achieved achievement achievements achieving accomplish accomplished accomplishment
proud proudly pride honored honor honors admiration admire admired admiring
praise praised praises praising praiseworthy applaud applauded applause congratulate congratulated congratulations
wonderful wonderfully marvelous marvelously fabulous fabulously fantastic fantastically terrific
splendid splendidly superb superbly magnificent magnificently glorious gloriously glory
excellence excellent excellently outstanding brilliant brilliantly amazing awesome incredible incredibly
extraordinary remarkable remarkably beautiful beautifully beauty lovely loveliness charming
enchanted enchanting enchantment captivating dazzling stunning magical heavenly divine paradise
bloom blooming blossom blossomed blossoming refresh refreshed refreshing rejuvenated rejuvenating
invigorated invigorating energetic energized zest zestful gusto relish relished savor savored savoring
revel reveled reveling bask basking frolic frolicking romp skipping
dance danced dancing sing singing song chuckle chuckled chuckles chuckling giggle giggled giggles giggling
jovial joviality genial affable amiable amiably cordial cordially convivial sociable
hearten heartened heartening heartwarming uplift uplifted uplifting
inspiration inspirational inspire inspired inspiring encourage encouraged encouragement encouraging
motivate motivated motivating motivation empower empowered empowering
confidence confident confidently assured reassurance reassured reassuring
relief relieved relieving freedom freely liberated liberating liberation
ease easygoing breezy chirpy blithe blithely beatific exhilarated exhilarating exhilaration
felicity rapture rapturous rapturously overjoyed gleaming jubilee heartfelt goodwill
friendship harmony harmonious harmoniously unity togetherness festival smiley
vivacious vivacity effervescent exultantly gladsome sunshine merrier merriest
admirable agreeable agreeably amicable amity animated bonny bountiful bounty bravo
bright brighter brightest charmed charismatic comfy congenial conviviality dandy dear dearly
dreamy ebullient ebullience endearing enliven enlivened enthuse enthused exquisite exquisitely
favorable favorably felicitous festively fondest gaiety gleam gleamed glow glowed glowing
good goodhearted goodness grand grandly heartily hearty hooray hurrah idyllic
invigorate jaunty keen keenly laughingly lightness likable lovable lovelier loveliest
luckier luckiest magnificence merrymaking mirthfully nice nicely nicer nicest optimist
peace perfect perfection perfectly positive positively positivity radiate radiated rapt
ravishing rosy satisfyingly serendipitous serendipity snug snugly sparkle sparkled sparkles
splendor sublime sunnier superlative treasure treasured triumphal victoriously vigor vigorous
welcome welcomed wellbeing wholesome yay zeal zestfully zippy
""".split()

SADNESS = """
sad sadly sadness sadden saddened saddening saddens unhappy unhappily unhappiness
sorrow sorrows sorrowful sorrowfully grief grieve grieved grieves grieving grievous
mourn mourned mourner mourners mournful mournfully mourning mourns
weep weeping weeps wept cry cried cries crying tears tearful tearfully teary
sob sobbed sobbing sobs wail wailed wailing wails whimper whimpered whimpering
lament lamentation lamented lamenting laments anguish anguished agony agonized agonizing agonizingly
heartache heartbreak heartbreaking heartbroken brokenhearted devastated devastating devastation
crushed shattered despair despaired despairing desperation desperate desperately
hopeless hopelessly hopelessness despondency despondent dejected dejectedly dejection
downcast downhearted disheartened dispirited demoralized depressed depressing depression depressive
melancholy melancholic gloom gloomy gloomily glum glumly morose morosely
somber somberly dismal dismally dreary drearily bleak bleakly bleakness
forlorn forlornly woeful woefully woe woes misery miseries miserable miserably
wretched wretchedly wretchedness distress distressed distressing distraught
upset upsetting troubled troubling hurt hurting hurts pain pained painful painfully pains
ache ached aches aching suffer suffered suffering suffers torment tormented tormenting
regret regretful regretfully regrets regrettable regrettably regretted remorse remorseful remorsefully
rue rueful ruefully guilt guilty ashamed shame shameful shamefully
humiliated humiliating humiliation disgrace disgraced disgraceful
lonely loneliness lonesome isolated isolation abandoned abandonment forsaken
neglect neglected rejected rejection unloved unwanted homesick homesickness
nostalgia nostalgic longing yearning pining bereaved bereavement bereft
mope moped moping sulk sulked sulking sulky brood brooded brooding
downtrodden crestfallen disappoint disappointed disappointing disappointment disappointments disappoints
dissatisfaction dissatisfied disillusioned disillusionment discouraged discouragement discouraging
defeated dashed letdown heartsick heavyhearted joyless cheerless inconsolable
tragedy tragedies tragic tragically pitiful pitifully pity pitiable
sorry apologetic weary wearily weariness drained emptiness hollow numb numbness
listless grim grimly grimness doleful dolefully plaintive plaintively heartrending
bawl bawled bawling bawls bemoan bemoaned bemoaning bemoans sadder saddest
sorrier teardrop teardrops wistful wistfully wistfulness mournfulness funereal elegiac woebegone
careworn burdened gloominess melancholia despairs despondently agonize agonizes heartaches anguishing
""".split()

SURPRISE = """
surprise surprised surprises surprising surprisingly astonish astonished astonishing astonishingly astonishment
amaze amazed amazement astound astounded astounding astoundingly
stun stunned shock shocked shocker shocking shockingly
startle startled startling startlingly dumbfounded dumbstruck flabbergasted gobsmacked thunderstruck
awestruck awe awed bewildered bewildering bewilderment baffled baffling bafflement
perplexed perplexing perplexity puzzled puzzlement puzzling confounded confounding mystified mystifying
disbelief incredulity incredulous incredulously unbelievable unbelievably
unexpected unexpectedly unanticipated unforeseen unimaginable unthinkable inconceivable
sudden suddenly abrupt abruptly jolt jolted jolting gasp gasped gasping gasps
speechless agape agog wonder wondered wondering wonderment wondrous
marvel marveled marveling marvels miracle miracles miraculous miraculously
revelation bombshell staggering staggered breathtaking whoa wow startles
""".split()

SOURCES = {
    "anger": ANGER,
    "disgust": DISGUST,
    "fear": FEAR,
    "joy": JOY,
    "sadness": SADNESS,
    "surprise": SURPRISE,
}


def build() -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    owner: dict[str, str] = {}
    for emotion in sorted(TARGETS):
        words = SOURCES[emotion]
        seen_here: set[str] = set()
        kept: list[str] = []
        for w in words:
            if not w.isalpha() or w != w.lower():
                raise SystemExit(f"{emotion}: bad token {w!r}")
            if w in seen_here:
                raise SystemExit(f"{emotion}: duplicate within list: {w!r}")
            seen_here.add(w)
            if w in owner:
                raise SystemExit(f"{w!r} listed under both {owner[w]} and {emotion}")
            owner[w] = emotion
            kept.append(w)
        need = TARGETS[emotion]
        if len(kept) < need:
            raise SystemExit(f"{emotion}: {len(kept)} words, need {need}")
        print(f"{emotion}: {len(kept)} candidates -> keeping {need}")
        rows.extend((w, emotion) for w in kept[:need])
    return rows


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "moodmap" / "data" / "emotions.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    rows = build()
    with out.open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["word", "emotion"])
        writer.writerows(rows)
    print(f"wrote {len(rows)} keywords -> {out}")


if __name__ == "__main__":
    sys.exit(main())
