#include "gnrw/verb_lexicon.hpp"

namespace gnrw {

// base,third_singular,past - consumed by builtin_verb_lexicon().
const char* kBuiltinVerbTable = R"vtab(
accept,accepts,accepted
achieve,achieves,achieved
act,acts,acted
add,adds,added
admire,admires,admired
admit,admits,admitted
adopt,adopts,adopted
advise,advises,advised
agree,agrees,agreed
aim,aims,aimed
allow,allows,allowed
announce,announces,announced
annoy,annoys,annoyed
answer,answers,answered
appear,appears,appeared
applaud,applauds,applauded
apply,applies,applied
approach,approaches,approached
approve,approves,approved
argue,argues,argued
arise,arises,arose
arrange,arranges,arranged
arrest,arrests,arrested
arrive,arrives,arrived
ask,asks,asked
assist,assists,assisted
assume,assumes,assumed
attack,attacks,attacked
attempt,attempts,attempted
attend,attends,attended
attract,attracts,attracted
avoid,avoids,avoided
awake,awakes,awoke
bake,bakes,baked
balance,balances,balanced
ban,bans,banned
bang,bangs,banged
bark,barks,barked
bat,bats,batted
bathe,bathes,bathed
beam,beams,beamed
beg,begs,begged
begin,begins,began
behave,behaves,behaved
believe,believes,believed
belong,belongs,belonged
bend,bends,bent
bet,bets,bet
bind,binds,bound
bite,bites,bited
blame,blames,blamed
bleed,bleeds,bled
bless,blesses,blessed
blink,blinks,blinked
block,blocks,blocked
bloom,blooms,bloomed
blot,blots,blotted
blow,blows,blew
blush,blushes,blushed
boast,boasts,boasted
boil,boils,boiled
bolt,bolts,bolted
bomb,bombs,bombed
book,books,booked
borrow,borrows,borrowed
bounce,bounces,bounced
bow,bows,bowed
brag,brags,bragged
brake,brakes,braked
branch,branches,branched
breathe,breathes,breathed
breed,breeds,bred
bring,brings,brought
brush,brushes,brushed
build,builds,built
bump,bumps,bumped
burn,burns,burned
burst,bursts,burst
bury,buries,buried
buy,buys,bought
call,calls,called
calm,calms,calmed
camp,camps,camped
care,cares,cared
carry,carries,carried
carve,carves,carved
catch,catches,caught
cause,causes,caused
celebrate,celebrates,celebrated
chant,chants,chanted
charge,charges,charged
chase,chases,chased
chat,chats,chatted
cheat,cheats,cheated
check,checks,checked
cheer,cheers,cheered
chew,chews,chewed
choose,chooses,chose
chop,chops,chopped
claim,claims,claimed
clap,claps,clapped
clean,cleans,cleaned
clear,clears,cleared
climb,climbs,climbed
cling,clings,clung
clip,clips,clipped
close,closes,closed
collect,collects,collected
comb,combs,combed
come,comes,came
command,commands,commanded
comment,comments,commented
communicate,communicates,communicated
compare,compares,compared
compete,competes,competed
complain,complains,complained
complete,completes,completed
concern,concerns,concerned
confess,confesses,confessed
connect,connects,connected
consider,considers,considered
consist,consists,consisted
contain,contains,contained
continue,continues,continued
control,controls,controlled
cook,cooks,cooked
copy,copies,copied
correct,corrects,corrected
cost,costs,cost
cough,coughs,coughed
count,counts,counted
cover,covers,covered
crack,cracks,cracked
crash,crashes,crashed
crawl,crawls,crawled
creep,creeps,crept
cross,crosses,crossed
crush,crushes,crushed
cry,cries,cried
cure,cures,cured
curl,curls,curled
cycle,cycles,cycled
dam,dams,damed
damage,damages,damaged
dance,dances,danced
dare,dares,dared
deal,deals,dealt
decay,decays,decayed
decide,decides,decided
decorate,decorates,decorated
delay,delays,delayed
delight,delights,delighted
deliver,delivers,delivered
demand,demands,demanded
depend,depends,depended
describe,describes,described
desert,deserts,deserted
deserve,deserves,deserved
destroy,destroys,destroyed
detect,detects,detected
develop,develops,developed
dig,digs,dug
dine,dines,dined
dip,dips,dipped
direct,directs,directed
disagree,disagrees,disagreed
disappear,disappears,disappeared
disapprove,disapproves,disapproved
disarm,disarms,disarmed
discover,discovers,discovered
dislike,dislikes,disliked
divide,divides,divided
do,does,did
dot,dots,dotted
doubt,doubts,doubted
drag,drags,dragged
drain,drains,drained
dream,dreams,dreamed
dress,dresses,dressed
drink,drinks,drank
drip,drips,driped
drive,drives,drove
drop,drops,dropped
drown,drowns,drowned
drum,drums,drummed
dry,dries,dried
dust,dusts,dusted
earn,earns,earned
eat,eats,ate
echo,echoes,echoed
edit,edits,edited
educate,educates,educated
embarrass,embarrasses,embarrassed
employ,employs,employed
empty,empties,emptied
encourage,encourages,encouraged
end,ends,ended
enjoy,enjoys,enjoyed
enter,enters,entered
entertain,entertains,entertained
escape,escapes,escaped
examine,examines,examined
excite,excites,excited
excuse,excuses,excused
exist,exists,existed
expand,expands,expanded
expect,expects,expected
explain,explains,explained
explode,explodes,exploded
extend,extends,extended
face,faces,faced
fade,fades,faded
fail,fails,failed
fancy,fancies,fancied
fasten,fastens,fastened
fax,faxes,faxed
fear,fears,feared
feed,feeds,fed
feel,feels,felt
fence,fences,fenced
fetch,fetches,fetched
fight,fights,fought
file,files,filed
fill,fills,filled
film,films,filmed
find,finds,found
finish,finishes,finished
fire,fires,fired
fit,fits,fited
fix,fixes,fixed
flap,flaps,flapped
flash,flashes,flashed
flee,flees,fled
fling,flings,flung
float,floats,floated
flood,floods,flooded
flow,flows,flowed
flower,flowers,flowered
fly,flies,flew
fold,folds,folded
follow,follows,followed
forbid,forbids,forbade
force,forces,forced
foresee,foresees,foresaw
forget,forgets,forgot
forgive,forgives,forgave
form,forms,formed
found,founds,founded
frame,frames,framed
fry,fries,fried
gather,gathers,gathered
get,gets,got
give,gives,gave
glow,glows,glowed
glue,glues,glued
go,goes,went
grab,grabs,grabbed
grant,grants,granted
grate,grates,grated
greet,greets,greeted
grin,grins,grinned
grind,grinds,ground
grip,grips,gripped
groan,groans,groaned
grow,grows,grew
guarantee,guarantees,guaranteed
guard,guards,guarded
guess,guesses,guessed
guide,guides,guided
hammer,hammers,hammered
hand,hands,handed
handle,handles,handled
hang,hangs,hung
happen,happens,happened
harm,harms,harmed
hate,hates,hated
haunt,haunts,haunted
head,heads,headed
heal,heals,healed
heap,heaps,heaped
heat,heats,heated
help,helps,helped
hold,holds,held
hook,hooks,hooked
hop,hops,hopped
hope,hopes,hoped
hover,hovers,hovered
hug,hugs,hugged
hum,hums,humed
hunt,hunts,hunted
hurry,hurries,hurried
hurt,hurts,hurt
identify,identifies,identified
ignore,ignores,ignored
imagine,imagines,imagined
impress,impresses,impressed
improve,improves,improved
include,includes,included
increase,increases,increased
influence,influences,influenced
inform,informs,informed
inject,injects,injected
injure,injures,injured
instruct,instructs,instructed
intend,intends,intended
interest,interests,interested
interfere,interferes,interfered
interrupt,interrupts,interrupted
introduce,introduces,introduced
invent,invents,invented
invite,invites,invited
irritate,irritates,irritated
itch,itches,itched
jail,jails,jailed
jam,jams,jammed
jog,jogs,jogged
join,joins,joined
joke,jokes,joked
judge,judges,judged
juggle,juggles,juggled
jump,jumps,jumped
keep,keeps,kept
kick,kicks,kicked
kill,kills,killed
kiss,kisses,kissed
kneel,kneels,knelt
knit,knits,knitted
knock,knocks,knocked
knot,knots,knotted
know,knows,knew
label,labels,labeled
land,lands,landed
last,lasts,lasted
laugh,laughs,laughed
launch,launches,launched
lay,lays,laid
lead,leads,led
lean,leans,leaned
leap,leaps,leaped
learn,learns,learned
leave,leaves,left
lend,lends,lent
level,levels,leveled
license,licenses,licensed
lick,licks,licked
light,lights,lit
lighten,lightens,lightened
like,likes,liked
list,lists,listed
listen,listens,listened
live,lives,lived
load,loads,loaded
lock,locks,locked
log,logs,logged
long,longs,longed
look,looks,looked
lose,loses,lost
love,loves,loved
man,mans,maned
manage,manages,managed
march,marches,marched
mark,marks,marked
marry,marries,married
match,matches,matched
matter,matters,mattered
measure,measures,measured
meet,meets,met
melt,melts,melted
mend,mends,mended
mention,mentions,mentioned
mess,messes,messed
milk,milks,milked
mine,mines,mined
mislead,misleads,misled
miss,misses,missed
mix,mixes,mixed
moan,moans,moaned
moor,moors,moored
mop,mops,mopped
mourn,mourns,mourned
move,moves,moved
mug,mugs,mugged
multiply,multiplies,multiplied
murder,murders,murdered
nail,nails,nailed
name,names,named
nap,naps,napped
need,needs,needed
nest,nests,nested
nod,nods,nodded
note,notes,noted
notice,notices,noticed
number,numbers,numbered
obey,obeys,obeyed
object,objects,objected
observe,observes,observed
obtain,obtains,obtained
occur,occurs,occurred
offend,offends,offended
offer,offers,offered
open,opens,opened
order,orders,ordered
outdo,outdoes,outdid
outgrow,outgrows,outgrew
overcome,overcomes,overcame
overflow,overflows,overflowed
oversee,oversees,oversaw
owe,owes,owed
own,owns,owned
pack,packs,packed
paint,paints,painted
park,parks,parked
part,parts,parted
pass,passes,passed
paste,pastes,pasted
pat,pats,patted
pause,pauses,paused
pay,pays,paid
peck,pecks,pecked
pedal,pedals,pedaled
peel,peels,peeled
peep,peeps,peeped
perform,performs,performed
permit,permits,permitted
phone,phones,phoned
pick,picks,picked
pinch,pinches,pinched
pine,pines,pined
place,places,placed
plan,plans,planned
plant,plants,planted
play,plays,played
please,pleases,pleased
plug,plugs,plugged
point,points,pointed
poke,pokes,poked
polish,polishes,polished
pop,pops,popped
possess,possesses,possessed
post,posts,posted
pour,pours,poured
practice,practices,practiced
pray,prays,prayed
preach,preaches,preached
prefer,prefers,preferred
prepare,prepares,prepared
present,presents,presented
preserve,preserves,preserved
press,presses,pressed
pretend,pretends,pretended
prevent,prevents,prevented
prick,pricks,pricked
print,prints,printed
produce,produces,produced
program,programs,programed
promise,promises,promised
protect,protects,protected
provide,provides,provided
pull,pulls,pulled
pump,pumps,pumped
punch,punches,punched
punish,punishes,punished
push,pushes,pushed
question,questions,questioned
quit,quits,quit
race,races,raced
radiate,radiates,radiated
rain,rains,rained
raise,raises,raised
reach,reaches,reached
read,reads,read
realise,realises,realised
receive,receives,received
recognise,recognises,recognised
record,records,recorded
reduce,reduces,reduced
reflect,reflects,reflected
refuse,refuses,refused
regret,regrets,regretted
reign,reigns,reigned
reject,rejects,rejected
rejoice,rejoices,rejoiced
relax,relaxes,relaxed
release,releases,released
rely,relies,relied
remain,remains,remained
remember,remembers,remembered
remind,reminds,reminded
remove,removes,removed
repair,repairs,repaired
repeat,repeats,repeated
replace,replaces,replaced
reply,replies,replied
report,reports,reported
reproduce,reproduces,reproduced
request,requests,requested
rescue,rescues,rescued
rest,rests,rested
retire,retires,retired
return,returns,returned
rhyme,rhymes,rhymed
ride,rides,rode
ring,rings,ringed
rinse,rinses,rinsed
rise,rises,rose
risk,risks,risked
rob,robs,robbed
rock,rocks,rocked
roll,rolls,rolled
rot,rots,rotted
rub,rubs,rubbed
ruin,ruins,ruined
rule,rules,ruled
run,runs,ran
rush,rushes,rushed
sack,sacks,sacked
sail,sails,sailed
satisfy,satisfies,satisfied
save,saves,saved
saw,saws,sawed
say,says,said
scan,scans,scanned
scare,scares,scared
scatter,scatters,scattered
scold,scolds,scolded
scorch,scorches,scorched
scrape,scrapes,scraped
scratch,scratches,scratched
scream,screams,screamed
screw,screws,screwed
scribble,scribbles,scribbled
scrub,scrubs,scrubbed
seal,seals,sealed
search,searches,searched
see,sees,saw
seek,seeks,sought
select,selects,selected
sell,sells,sold
send,sends,sent
separate,separates,separated
serve,serves,served
settle,settles,settled
sew,sews,sewed
shade,shades,shaded
shake,shakes,shook
share,shares,shared
shave,shaves,shaved
shelter,shelters,sheltered
shine,shines,shined
ship,ships,shipped
shiver,shivers,shivered
shock,shocks,shocked
shoot,shoots,shot
shop,shops,shopped
show,shows,showed
shrink,shrinks,shrank
shrug,shrugs,shrugged
shut,shuts,shut
sign,signs,signed
signal,signals,signaled
sin,sins,sined
sing,sings,sang
sink,sinks,sank
sip,sips,sipped
sit,sits,sat
sketch,sketches,sketched
ski,skis,skied
skip,skips,skipped
slap,slaps,slapped
sleep,sleeps,slept
slide,slides,slid
slip,slips,slipped
slow,slows,slowed
smash,smashes,smashed
smell,smells,smelled
smile,smiles,smiled
smoke,smokes,smoked
snap,snaps,snapped
sneak,sneaks,sneaked
sniff,sniffs,sniffed
snore,snores,snored
snow,snows,snowed
soak,soaks,soaked
sound,sounds,sounded
sow,sows,sowed
spare,spares,spared
spark,sparks,sparked
speak,speaks,spoke
spell,spells,spelled
spend,spends,spent
spill,spills,spilled
spin,spins,spun
spoil,spoils,spoiled
spot,spots,spotted
spray,sprays,sprayed
spread,spreads,spread
spring,springs,springed
sprout,sprouts,sprouted
squash,squashes,squashed
squeak,squeaks,squeaked
squeal,squeals,squealed
stamp,stamps,stamped
stand,stands,stood
stare,stares,stared
start,starts,started
stay,stays,stayed
steal,steals,stole
steer,steers,steered
step,steps,stepped
stick,sticks,stuck
sting,stings,stung
stir,stirs,stirred
stitch,stitches,stitched
stop,stops,stopped
store,stores,stored
strap,straps,strapped
stretch,stretches,stretched
stride,strides,strode
strike,strikes,struck
strip,strips,stripped
stroke,strokes,stroked
struggle,struggles,struggled
study,studies,studied
stuff,stuffs,stuffed
subtract,subtracts,subtracted
succeed,succeeds,succeeded
suck,sucks,sucked
suffer,suffers,suffered
suggest,suggests,suggested
suit,suits,suited
supply,supplies,supplied
support,supports,supported
suppose,supposes,supposed
surprise,surprises,surprised
surround,surrounds,surrounded
suspect,suspects,suspected
suspend,suspends,suspended
swear,swears,swore
sweep,sweeps,swept
swell,swells,swelled
swim,swims,swam
swing,swings,swung
switch,switches,switched
take,takes,took
talk,talks,talked
tame,tames,tamed
tap,taps,tapped
taste,tastes,tasted
teach,teaches,taught
tease,teases,teased
tell,tells,told
tempt,tempts,tempted
test,tests,tested
thank,thanks,thanked
thaw,thaws,thawed
think,thinks,thought
tick,ticks,ticked
tickle,tickles,tickled
tip,tips,tipped
tire,tires,tired
touch,touches,touched
tour,tours,toured
tow,tows,towed
trace,traces,traced
trade,trades,traded
train,trains,trained
transport,transports,transported
trap,traps,trapped
travel,travels,traveled
treat,treats,treated
tremble,trembles,trembled
trick,tricks,tricked
trot,trots,trotted
trouble,troubles,troubled
trust,trusts,trusted
try,tries,tried
tug,tugs,tugged
tumble,tumbles,tumbled
turn,turns,turned
twist,twists,twisted
type,types,typed
undergo,undergoes,underwent
understand,understands,understood
undo,undoes,undid
undress,undresses,undressed
unfasten,unfastens,unfastened
unite,unites,united
unlock,unlocks,unlocked
unpack,unpacks,unpacked
untidy,untidies,untidied
vanish,vanishes,vanished
visit,visits,visited
wail,wails,wailed
wait,waits,waited
walk,walks,walked
wander,wanders,wandered
want,wants,wanted
warm,warms,warmed
warn,warns,warned
wash,washes,washed
waste,wastes,wasted
watch,watches,watched
water,waters,watered
wave,waves,waved
wear,wears,wore
weep,weeps,wept
weigh,weighs,weighed
welcome,welcomes,welcomed
wind,winds,wound
wink,winks,winked
wish,wishes,wished
wobble,wobbles,wobbled
wonder,wonders,wondered
work,works,worked
worry,worries,worried
wrap,wraps,wrapped
wreck,wrecks,wrecked
wrestle,wrestles,wrestled
wriggle,wriggles,wriggled
wring,wrings,wringed
write,writes,wrote
yawn,yawns,yawned
yell,yells,yelled
zoom,zooms,zoomed
)vtab";

}  // namespace gnrw
