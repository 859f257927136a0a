@problemName NoiseVsAr1
@univariate true
@classLabel true 0 1
@data
0.47011656168741023,-0.358113012648355,1.3258722307743436,-1.1884990109172011,-0.9442708271003785,-0.9784613391928345,0.569866507073393,0.9970425497894675,-0.26999642001980406,0.05608619093290286,-1.0216066014849092,1.5396808783958118,-1.242105202764748,0.3046573757907995,-1.1737344041473083,-0.602792054123758,0.018953212870507146,1.2164407422666546,-0.2142901297769592,-0.29928621399588207,-0.09334867487846815,0.3135569249667496,2.4103148774882635,0.47638648892452523,-0.14285002326009646,0.1946703101471839,-1.8782802382929198,0.020667575202689775,0.427988856854854,0.24769527493311433,0.12141599619602769,1.096419350377116,-0.514415028467697,1.3239401584945418,-0.8081452353074254,-0.3242850985053728,-1.0219705799895,0.040135655703714,1.5852092233461135,0.9842543921505393,0.8043039797631486,1.2133411575211062,-0.5144959172043303,-0.18815234946885548,1.6753053329487795,-0.5453941297844248,0.43962552471163785,1.5236554744302393,-0.1642671133558703,0.8744542588080728,0.30811337066625055,0.15703060994214105,0.7149532395860279,1.2711366651611276,1.27254115938293,0.09408399859866015,0.48962823826784246,-0.5669653750737477,-0.8032762645141303,0.4054801633583959,-1.0348889086769608,1.705878656484253,2.232777040469617,1.115077725968959,0.8164364751580214,-1.3582483111119823,-0.4212680300055199,0.8285416356469595,0.6845109051609181,0.30250866124812736,0.726546533365187,-0.45129673704599726,-1.1054487755829256,-0.3247138375588295,-0.08712755948699827,-0.5108703991653193,0.5531562416513112,0.13778425928374796,-0.6463873703982382,-0.8191577546681651,-0.19371366960792377,1.1514864786336867,-0.8409813126966066,-0.3747451175446053,0.16757162821337102,-0.9678709565547913,-1.5072908582030902,-0.6001939059518161,-1.3563382605534398,1.2557088273797528,-0.17097048370285695,-1.6218097655554167,0.5372955042102859,-1.6698374261959605,-0.42649694497592633,0.40758113955206604,-0.6411021270609736,0.4287221034152472,-0.5376073297834889,-0.8522052543266295,-1.3183548014173718,-1.5174727181497312,0.5128342911790624,-1.4071842990574706,0.9898078667953027,-1.0907248263697946,-0.28150871203374533,1.0553443970959875,-0.02692806576174758,0.16498275912092888,1.0392899227713,1.1467940786208923,-0.6959785646533339,0.5545856576264029,-0.9677842379785411,-0.9912592926828183,-1.4153041367541923,-0.3837156132412947,0.4789352272028407,0.3650500674750313,-0.22249152508489312,0.852193725666578,2.3303234353843574,-0.3171150478051284,-0.964758332085154,1.6160421253780568,0.7296143175481398,1.5634182819583493:0
-2.6686041130239273,-2.7220811352408933,-1.9891843374366391,-1.3878148840862883,-1.6578429212762447,-0.8377333554272469,0.0919141289442259,1.1584374398438178,0.8397388136092722,0.31561375003614706,0.6328683963862013,0.6617552406053384,0.6720585701775597,1.2431906841284173,0.36092001321306666,0.8575359280798935,-0.20651761329238283,-0.7735851232914565,-0.9002554450777644,-0.20636387404785084,-0.03669347852971727,-0.3900137236546087,-1.1878413738872247,-2.106475096899308,-3.0692035371591873,-2.6998428905725986,-1.3041795148714814,-1.8352429430157422,-0.6038781895185263,-0.7946224715185416,-0.48187789389464514,-0.8491113244134381,-1.3860296285025093,-2.401767127921218,-1.5278927355184337,-0.6398060780775735,0.38920064558773726,-0.4838891359629247,0.41770990011997483,-0.06029082367206812,-1.8634459636874565,-1.342886541301481,-1.0430269668868584,-1.1521419952406333,-0.7621588490385002,-0.5974764619840748,-0.39139447671953137,-0.2154015017982225,-0.49844328677244054,-1.2321145615242872,-0.26849767206552355,0.5341834018877537,0.5055773046033353,0.3701931154291271,1.279062933482411,0.21168591998956554,0.2168232017647808,-0.5449039507664197,-0.7021979643136982,-0.8733186899243155,-1.334368975352005,-0.5062684631461951,-1.1637083393397047,-0.7460278275615466,-1.353720853781168,-0.9133096866475303,-0.5076477568248194,0.010268911504399458,-0.5382533394003105,0.36143022509409173,0.272993739575023,0.3086305667886231,-0.03397878796722403,-0.2850665587403353,-0.06709309584179599,-0.5230497861010336,-0.4247064509961593,-0.03367143961545138,-1.6641935348486452,-0.8597341212050429,-0.4807224708571065,0.2677736151674222,-0.1792371260552779,0.2387574924837585,0.4010626159668479,-1.0646556886137013,-0.6597542249938133,-0.7531107793852618,-0.6683388816939123,-0.8335449357750007,-0.08962211392236052,0.939792209515498,0.22006892665216138,-0.3930396622457831,-0.21264489340224935,-0.061409083356592856,-0.20540052903741973,-0.7800918844870849,-0.18922392679654765,-0.29020482800780334,0.7103923908699963,0.516448030325775,0.10245884467470318,-0.23670208729726422,0.36608496603372104,-0.5212282090251531,0.16104349873008494,0.22843638504634659,0.29351561414768734,-0.4883311286192822,-1.2343863122068077,-0.5773343592665048,0.2862337708248165,1.2298567632519921,1.645827389494952,1.6928529673144246,2.8160994632234493,1.8748359331952802,2.418983351387259,2.1045261648186977,0.4850632767661047,0.2001384807139616,0.817109957808833,0.8825601991317207,-0.0913983686623252,0.627572411893864,1.6685280763721617,0.9245089278259764:1
-0.7623361385947637,-0.026770422120781533,-1.8437099292905377,1.8670894023605178,-1.2866094679021705,0.6448787898863341,2.01873140653945,-0.6921357178675707,-0.9730524102611159,-0.8996599380657766,1.690780043595895,-0.12130852377378037,0.23014059686217903,-1.0494567601572244,0.6981519960435216,0.6714304275318013,0.28371084164358407,0.40241089650069767,-0.6683800207628656,-0.5822841464974479,-1.4969672456083776,-0.3789295328989238,-1.087581478239609,0.8882251737567309,-0.15046377994663493,0.9899921600497541,0.02549650879111544,-1.0346289279713112,1.8150254377510011,-0.0016150340681865252,0.8595334991696959,0.381627804662617,-1.627144272236903,-0.3183526149540842,1.9354164133995777,0.10006933376075434,1.5690913623659506,0.3034730167906109,0.9703146656850261,1.4192149529203058,0.31886184117203537,-1.1518759365393831,0.6697191495398052,0.6228891990536038,-1.3054149276964133,-0.5773677806733686,-0.6123838344539865,-1.2358483223897287,0.3807164763152284,-0.4856474339123735,-1.0985847146299503,0.613738217398558,-0.1641400056218366,-0.9190963029010976,-0.10076873536567976,0.5035208782355058,-0.957713205350966,0.6512859523379517,-1.8114544055985033,-0.19872207150812082,0.32671991879524265,0.12799536862713015,0.8079699181066011,1.0630611753573724,-2.3804652783105285,-1.0959314499247605,-0.4490307455477781,-0.909969486988547,0.7538658933915752,1.5086182978949136,0.7349801347794823,1.3671320575410342,0.5558318962400612,0.39711359293120535,0.0414562141667489,0.5673617424347206,-0.13511020083456818,0.6754581293374592,1.0286593092105552,-0.8007346591328464,0.9980498483383946,-0.6512273571669337,-1.939552013192953,-0.9120608745920595,0.34568667547064114,-0.32752541407107805,0.4405123029098833,-0.07628355998854738,0.8961282666440138,-1.7692206137328692,0.4953035990094219,-0.3173838075307679,0.2670656561687211,-1.2921382629504534,-0.7773719355463644,0.5779630840571729,1.3873664156874392,0.5162925709175581,0.3972633250354095,0.624826619177461,-0.38227406555355953,-0.30749885792903797,-2.5566935627069616,0.11300839547775895,-0.11901023130974309,-1.4699673480416557,-1.2841213149775093,1.2647524853619392,0.29233366829051965,0.09592756127557014,1.0370550536408758,-1.1280033641183493,-0.5021937364785406,0.9793238375172095,0.8371415364424503,-0.08281845590276148,0.30715447081488334,0.45273187616659,0.7787565056590924,0.602634955272959,1.0412241360968473,0.8884961198602493,0.5609415931120132,-0.023251502565665258,1.9477492605910638,-0.9791722780857222,-0.7850120364738842,-2.243568756316483:0
0.3023900445548468,0.9534804470368904,0.25000508417720735,0.7904762719665311,1.0132628412817921,-0.04554577047523489,0.4534629641965871,0.2455743384835365,-0.6776980286306243,-1.2571342716794989,-2.2107178694879055,-1.632176959510419,-1.4924742778499014,0.39813224773725486,0.009198088693594786,0.22638344640827396,1.0901361627437927,0.3223054738144393,-0.3962647813101178,-0.7770840363349898,-0.15664308320363923,-0.3011571682699284,0.284443768862254,0.12812182524888238,1.3137781536693214,0.9022467288340796,0.7623483156601901,0.5408773700934852,0.09376886224860181,0.131574757012866,-0.12851852317767457,0.024821817684108585,0.5474360427666813,0.05857061276889303,0.5073513265329567,-0.07874654924984842,0.24980220425206262,-0.15158394837104272,-0.7258326652149973,-0.22210535679178084,-0.8808734296929304,-0.7410910284283753,-0.578599695796866,-0.9892969262692467,-1.6549945082824915,-1.115809138719287,-0.9645677595647876,-1.1791650799703257,-0.595242032061106,-0.6315590368032595,-0.9395829421157305,-0.13711881688361094,0.5472203104130319,0.9894596323904414,0.44802081084661005,-0.5114170035409176,-0.11582767094878432,-0.43662212057207034,-0.585639395585339,-1.0452632385065836,-0.09432303090560168,-0.1364211151555335,-0.05655342279310229,0.020300061239961635,-0.210417435129866,0.18486423501262034,0.3630553179131403,-0.5623889969383657,0.15240792474472864,0.8295193125904828,0.04082057676568962,0.9358512742274903,0.7684999502351214,0.6102856419592761,0.7733404246836544,0.621084410797185,0.03290142771906868,0.3596045835902021,-0.011492451380193114,-1.2469154881261715,-0.699423949919356,-0.7077095690674705,-0.5853074048683813,-0.4097247163559362,0.4657187637193692,0.5051243257908469,0.6331242799479336,0.7497626169148738,-0.6152099722600441,-0.41675717698292436,-0.1551302822337939,0.10174393541568093,0.8633229794286998,2.21814134781365,1.6274174736673148,1.125033449269936,2.1942879077492172,0.7962462248923912,1.4964272350427037,1.1849309395465644,0.8552984405474732,0.21468757525231336,-0.9157262603740315,-0.43329745610644843,-0.032743480543436676,-0.4179937048273917,0.2166142765747987,-0.24084261585709177,0.7273779711173978,-1.1721181340414142,-1.3408738348801097,-1.540655510825755,-1.0668119957607622,-1.7148736234196673,-1.2579850995701496,-0.23200648007357882,-0.586528156062496,-1.8004831274770616,-1.7433925825661674,-1.366786742317234,-0.5118513967534463,0.24608278476405976,0.27956397930054744,0.1935193148819258,0.08300222793898007,-0.4674749215906839,0.6904067316172902,0.5128921339839674:1
0.3902864866985752,-0.2545408908713683,1.7260045106653736,-1.5209962321364825,1.0408027958510226,1.2270877628669115,0.47696286972462554,-0.4208744989613957,0.3652789992664151,-0.43637618286346697,-1.068085408655817,1.7312063100574637,-0.6640298397446505,1.0274544692024807,1.4137115660167319,0.5124251346316174,0.01807462177573151,0.25593782415850563,-0.6183135108743606,1.1350955605187607,-0.13126099808673145,-1.1027765245716759,0.6283433569889975,2.2829664968584207,0.4171599898204541,2.682477787201092,-0.41239890530392576,0.6550965849227545,0.7426635991961176,-0.536983779613864,0.2536736620081839,-1.391503278161071,-0.40234777803419747,0.19211898320363857,-1.402109946634835,-0.9405269367667202,-0.04187524669197624,-0.3074486794266148,-0.16604268929303403,-1.0064263080409217,0.8454674598218148,0.09793550772415924,-0.8546758088226861,0.9990276723530255,0.24054487320876214,-0.15351468529991666,-1.7912671344128916,-1.5791839924516984,-0.7522964912873285,-0.2587802497312218,0.17281987818813527,-0.05636480862134974,-0.45241087364433114,-1.179968789212063,0.5415402334795103,0.2639389257446628,-0.46681464316968885,1.3969126974747332,-0.2647206030699443,0.7420627802969023,-1.2726818134226774,-0.3712650405977534,-0.07162556812912232,-1.6773349414521557,-1.3716270075751331,-0.7635634206909295,0.4703295338127157,-0.8204198110698018,0.25796035955598506,0.5916348218832336,1.202339484902484,2.03083370874174,0.4542689921067601,-0.2505966402749752,0.5304353512011782,-0.4756068507799077,-0.5382799710343059,-1.1461924840775226,0.469942603034881,0.2448456313428583,-0.05467202970374841,-0.002776033967726574,0.9485971414861959,-0.563904755199266,0.2980392310514506,0.056058418729016325,-0.5948214858668419,-1.3897365486147994,0.27103971579865194,0.25950187333795705,0.002456932922470864,1.080921316060638,0.26636509399552966,-0.43231675905545924,0.8227255049200634,-0.799008080540129,-0.7286587965366738,0.013779329241484334,1.595888383918156,0.5474989752198254,-0.21285150057050584,-1.582886661879713,-0.8748938742578387,-0.7253068224814356,-1.2389298627555394,-0.03528940208549584,-0.03474379164454211,1.014644131042576,1.47985841198519,-0.3422490902138587,-1.1964696214359658,0.1368997004353825,-2.3021757463609793,-0.3306762491981702,-0.3182950549042091,1.7595441860642607,-0.07470887484442514,-0.30909405894392145,-0.7592681499644841,0.6165184780764519,-2.4879127820527644,-0.7192700270093139,1.1194241801303237,-0.07796277736961497,-1.6656807990567606,-1.524477860814473,0.19308348451157312,0.04957743342941941:0
-1.0820996979034727,0.2473701752656281,0.6535178936859614,0.5802253834929757,0.26549104165384313,0.3818421602677532,0.0032527059819756343,0.31226800345207045,2.2491791124121017,1.4301070069688684,0.656262298894688,-0.03697965370015033,-0.17390191038569205,-0.11276948929673636,-0.12833833192488572,-0.30180214135040206,0.20775146214495857,0.014145380703605048,-0.6080008859986011,-0.03858930473861494,-0.3576104507229713,-0.7326042748074366,-0.7545673699189546,0.5659689914464731,0.2046760350879367,-0.8174417177337294,-1.156480150324643,-0.03342012809346828,1.1741935129074326,1.2171344832376438,1.099808486993987,0.35811172354100607,0.08010292558947757,0.4971457278184661,0.08001268990250099,-0.1650915750521854,0.5561805499891102,-0.04701064147944678,-0.8180553910388726,-0.5020239566446996,-0.7446218741155115,-0.9001006576601402,-1.0452760023570533,-0.6505134136817969,0.1449006452814524,1.0451778748047353,0.2796054447280094,-0.19566385805629538,-0.09353888583069295,0.5482441737932264,-1.0194566309826616,-0.1599592325394681,0.14052863710636126,0.04649571774694154,-0.13771052949107754,0.3163212124640545,0.6966203762542234,0.13814072824440188,-0.0730992376174336,0.368499087895231,0.7888062867306219,1.0291857435003589,-0.05463079851351793,1.1910522594355097,-0.18149016155000475,-0.01814570518118727,0.955871727995582,0.7210608151081904,1.7014011375309102,0.9556384098667446,-0.021832476298176307,0.1698783895219355,0.3474639796037181,0.12641342398650846,-0.5399128372870132,-0.19205844901531016,0.13635406864581462,0.4023652385643643,0.1256627136176174,-0.20473112662166731,-0.8698196349829896,-1.0687298748851373,-0.5445487629426142,0.11201132174251044,0.5868903193620404,1.1012346934097053,1.0117162533452058,2.1889501750886846,1.0069668340923523,0.7735339411368972,0.4841542554420071,-0.11641159550308922,-0.6312828687294498,-0.8573166147365109,0.23293698923885353,0.9009357344676023,0.12653156959240042,1.2768318126660205,1.3792852842905146,2.2390789251215697,1.2616299985667918,1.3447761489938568,1.2193664717053103,0.5168882952173749,-0.01625915931752897,-0.43269625987029947,0.06811414049340758,0.32996175258545346,0.6140628221278696,0.4029592386513301,0.5841215666770172,0.15726855128852346,-0.2093503883536281,-0.8516590383968872,-0.2911606850678238,-1.4801011274911118,-1.226621529295393,-1.3304269501026327,-0.9455928029580793,-1.315594806620143,-0.8646432315073147,-1.9868741060240653,-1.9335056375077564,-1.1280363410889547,-1.6675956546168624,-0.6074580009038683,0.8040201559097861,1.3532494196041949:1
-0.7223212929291957,-1.8418731416158016,0.5494298609962647,-0.7042925477946022,0.4686824876914476,0.3661089693860741,0.11885123528170771,-1.1147963420771811,-1.8165213246190952,0.4313701923339462,0.9403597373114404,-0.7393705085544995,0.2496802167457017,0.619441619121403,-2.089294861889036,-1.0118426696731253,0.4705502172544588,0.9807533981581007,-0.8314075431750398,1.8823658618403152,-0.9401328206685983,0.42078461910786163,-2.1678686323974663,-0.6409658643524185,-0.28884264246737623,0.32270533244884136,-1.590043289012319,-0.47016752445480314,0.7264114134101792,0.06523064200367291,-0.3830284070920879,0.7385043047231572,-1.4710454976078657,-1.7015707964460884,1.2463548383841871,1.402530636997961,-1.1551737532482294,-1.094299580187225,1.5206381326872946,0.14619701315859063,-0.7268627010548586,1.2650867755807456,0.8577754360068041,0.451237807680338,-0.6847665409814446,-0.3872608201583748,-0.4834078965181433,0.38752144692018164,0.3663469657138108,2.1992198256797555,-0.6949481042613207,-0.41914833668099494,-0.1563363681059638,-0.8194293528838001,-0.4112288431851664,0.09856974569507174,0.27296113769513397,0.012275505809462914,1.746024366027795,-0.7120529417219813,-2.0878751767098445,-0.7227155090331435,0.35484365659211253,0.2291145358899841,0.909360437292302,0.1544907231063297,-0.6243577286819112,-0.806430721716879,-0.07837798575243127,-1.9409692301123136,-0.8364023758692313,0.865130145333384,-0.1569037757229959,-0.4678146446503982,-0.3700057934064943,-0.6160035730440349,0.2882453777572901,-1.1034078979466575,1.1628744768356842,0.46641251712739995,-1.0958352678832766,-0.693679451201098,0.07501135018757758,-0.7346707201678356,-0.7201843573713917,0.06740317359942136,0.08847513530955882,0.1803294049440666,-0.44545370758020514,1.0860347655158393,0.7160324645693464,-0.14157227019638358,1.5411182755276487,-0.010140626370325865,0.24409654266168593,-0.15934794349833103,-1.2364609707330754,-0.19865255406904164,0.5844296043501029,-0.5774635731170615,1.2777602174587215,-0.41801428980208233,2.920882311917265,0.45969113292993097,0.1846884420622023,0.5476141814972001,0.2928930308625599,0.5592769266244856,0.055071217194089125,-1.0066150617884202,0.9514065246191926,-0.8579000266421114,-0.8881841150687337,1.3307183665959748,-0.875911297777564,0.4604437319578839,-1.9571372833410705,0.4672021716117983,0.47549207530706955,-1.3735147450693799,0.20665028385676265,1.1039617893501759,-0.24689916832961759,-0.7323535647937301,-0.3151424311137396,0.17116071072747438,0.37295824953847784,0.5976384804743323:0
-1.3421990239119155,-0.6130290911406224,-1.5952026536100519,-2.2053374882923156,-1.093358986216861,-1.103870303665563,-0.6140001405369537,-0.8077050513057618,0.38138656470253607,0.327232301925918,0.19279180233943782,0.08869441888896898,0.7124782266101268,-0.43628796561159755,-1.3840403692173724,-1.1760290963115603,-1.355185568722495,-1.347657038584972,-0.1624429720422802,0.4679757450949668,1.2868874116072628,2.1409767090827385,1.954457073959548,2.265812813882218,2.353043157554871,1.0830417291520522,1.0702600216666025,2.0902668319159425,1.5831920594262736,0.8609746972497273,0.34433594325279465,-0.03394387296717638,0.7856915392340844,0.9149858434299634,0.638844404792886,1.695151273537412,2.376697685635693,1.960016863546239,0.8462626842110963,0.093962662943322,0.2915008376711306,1.2912704931275854,0.9704368939080976,1.254763805539894,0.47645293075316175,0.6992628191764998,0.4737672563996095,0.33889465652795925,1.1955499562645648,0.9736007791457452,-0.1580972228345906,0.43651236037776364,0.6044676852917117,0.17779478489166523,-0.4506072623117038,-0.9065546642683724,-0.11254041950176608,-0.2027549987899425,0.19227550631207932,0.4660342468347969,1.1200758122837304,1.015795007711254,1.1208716672559098,1.17848533515135,0.9696698112932587,0.6552608595211107,-0.5695178733497377,0.38307896658435125,0.3723631550109039,-0.16092993557463053,-0.1242951862569668,0.21325225991418156,0.8616937296517551,0.2240085285272132,0.9855888500284556,1.1275152800354928,0.2930312116492032,0.07694777950046752,-0.32541481257512916,-0.7366048509615013,-1.6679863203334309,-0.8953498145482128,-0.5890574831981457,-0.4464938347711446,-0.1514174238761372,-0.14311181672573559,-0.460565489179273,1.4874909337727407,2.606675918629149,2.668947338605559,1.8809819712467422,1.6432413537873776,2.0131784433473765,1.9512016624999422,1.137310238836005,1.9137124126499412,2.334677684350429,2.6057755036638968,1.7791452254190845,1.0966893289776962,1.5980708951999725,2.0712380618656807,2.0025849433462146,1.4755420111916897,0.8779538963819158,-0.012535104508594519,-0.025545068423702355,-0.4523492029290618,-0.9100454617334073,-0.3545726897449068,0.661035064086205,0.7340778805695075,0.49841352776808445,1.0187167739899496,0.29359653305571776,0.37528383439455126,-0.2317418421702942,-0.7331561470910833,-0.43618831043224304,-0.137810782645288,-0.8830637213639281,0.1473411042757653,-0.49033653538656835,-1.3041023173348567,-1.5965824808160884,-1.3380864069637888,-0.08497616601346492,0.6045676743662359:1
1.203696429380341,-0.01280255980596367,0.47755710608125534,-0.4755208592069721,-0.7989124578457225,0.7154866342215632,0.4326222827650762,0.392853226417955,-0.05341568805186195,1.7141725631092053,-1.125843018850528,-1.2457603707500033,-0.04779381933896465,1.54435099625245,1.6421324019661387,-0.6676606308275033,1.3177007145149573,0.15739975798670322,-0.8669909080182767,-0.09109498848673264,-1.6160071869165042,0.4170363683286823,0.5529052886270006,0.11219968527979236,-0.7206296519563834,0.29670038904528445,-0.7098123401764863,0.13104945005453414,0.3311608936954147,-2.2304307872830513,-0.8061911750128472,0.03283312457528651,-0.12161854436602049,-0.32523812996599705,0.5241990199590163,-1.0978532430831007,0.454994447314732,0.38896121349099727,0.09337637217717908,-0.7536628796917566,1.8823642284232984,-0.7907975953284941,-1.0518929695886265,-0.46567226413337753,1.393223572780716,0.4773028793482098,1.1836975768335956,-0.34867720160347426,-0.06849847745610793,1.246309870079523,-0.3768770471391645,0.3317258482748408,-0.05515549311632427,0.4419216120532928,-0.6265534510229446,0.10282584692892643,-0.07484753756933231,1.6109253560699068,0.5155814004734045,0.5323536675507046,-1.2494600182452689,0.6602354988867042,0.4810814217649532,-0.24027129727899782,-0.5230943866014598,0.24795304566818852,-0.24921657929063232,1.7460008555692996,-0.2188672836972118,-0.22434708282921068,-1.0991511279247375,-0.6735100015223185,-0.30291462897648125,0.6985599535219389,1.4141064932362026,0.3654515949310541,-1.2555985900048696,-1.4717165744089284,0.7198371218944059,-0.5934546989024432,-0.0635407083306779,-2.4139926259706406,0.19220244156849067,0.11957762851097709,-1.261736228576639,0.5047741519773905,1.5442541235021312,0.16551419161109393,2.745728521404026,1.0153369381081847,-0.055476621248840695,1.2026430270949182,-0.7882670217837885,-0.7874840858443075,1.5557671263825643,0.27714791032473785,-1.1106578373670999,-2.018143105527887,-0.9786722931147065,0.8512678570668248,-0.21774772156604197,-0.14987740374488828,0.9968406068452659,-1.5688118561094158,-2.224337807300495,0.8117127051445422,1.465382825928053,0.2598896919209958,1.5098004729356065,-0.024301718065568245,-1.3971256016030689,0.19980877892209353,0.2302931416617605,-1.1258862036286823,0.26382085016490286,1.340334422234078,-1.6546435761974305,-0.5372507650797562,-1.755521718881959,-0.9595222491318836,1.6061703280756903,0.6397011675088041,-0.8659831061156467,0.2882792305546001,-0.700557467551429,1.532727909407698,1.2770170332505786,-0.9244758844051375:0
-0.545757021003446,0.3000317370329228,0.7015739417299769,1.1374506215690299,0.5782001752300719,-0.46211926883150123,0.1818236926249145,0.8924245259334972,0.015704501949149963,-0.4288888179934903,-0.31696976256637155,-0.0025895832276083275,0.5149259135258214,1.1181244525102738,0.35635359615837603,0.8298834875828578,0.2616030638793539,0.6862919679885249,0.9035800109229218,0.5901783532906033,-0.3404479018567203,0.06632093999539995,0.8641944359631822,1.282807552101196,0.37802347860065777,1.0133045897074546,1.8720259605489475,1.5500722791562205,1.3632045914052355,1.7890543491973023,1.5327517518176041,0.6556856122668855,1.6269976791732719,3.3399724582175065,2.2649898918522338,1.45717151232195,1.8299877022980096,1.4519827388773958,0.41746109493365624,0.594937332302055,-0.8375783525476128,-0.5223399011492493,-0.694629494649108,-0.2589993190504576,-0.0921700888582119,0.03040382521607561,-0.6383598107867924,-0.46774895524433174,-0.11952766277458482,-0.50836769879933,0.3203465502797172,0.6954595298992263,0.5291685993845621,-0.5126388665739047,-0.5940818304044687,-1.3360749819541518,-0.6978815407122057,-0.8984524328800869,-1.0445499587491707,-0.3215591551939869,-0.022153796188925462,0.6873422928496792,-0.29668836511488883,-0.7222877315807885,-0.8049754915229002,-1.522910310594641,-1.409771340720532,-0.7994431197212507,-1.0738851299885055,-0.9023059257108613,-0.044662015954693435,1.0473670254613099,1.4978083108374505,-0.4946657975509272,0.32239984847996417,0.1669764692714379,-1.0040612382099736,-0.9492934361982266,-0.7827480086148062,-0.15922344667993732,0.16664388341382955,0.07453272231756877,1.0940371269673423,0.5986817134561593,-0.22928688017978854,-0.1677949933213617,-1.0849729537912065,0.2874418799194679,0.1776115007588767,1.4215254746483752,1.7629018784336548,1.5438922970524986,0.4034566222086595,-0.32255993673053207,0.023865376571764296,1.1551633476073089,0.2143000692603092,-0.7604077808925709,-0.6669795004365678,-1.7933916423947704,-1.4791492870276026,-1.4975489661547168,-1.6378290142228213,-0.4350049472814608,-0.7776717008685878,-1.0285928820826649,-0.7095786991859548,0.9287228480401126,0.8842474795157976,1.2225447578151432,0.31351976279415505,-0.8284374214976996,-0.06921229304691823,-0.5384024122683821,0.16761249155050123,-0.36920234694156834,0.5186498207733101,1.4251394075282127,1.826500555900937,1.8520985518254722,1.7641769346587657,1.817849900675005,1.1755097176695104,1.244800295508782,0.8123054218912625,0.008668429755088858,0.4591048716193667,1.4848944050446753:1
-1.7573593018242413,0.16297781416705678,0.22350316904064446,1.2928000025868345,-0.5708871817925305,-0.8719222335734386,-0.050975097099403247,0.8055349098897666,1.9279841377744673,1.33894168085011,-0.3365957654222847,0.9780387982496145,1.8430810968719813,0.10890777468588576,-0.2241004023543753,-0.07357597783377814,1.1227862739748498,1.445329894749328,1.1319534323689022,1.9163032549925365,0.7239185376106296,-0.8759468290779326,1.8528137267069336,-0.6819855806030876,-0.36147385760203454,-0.2363405807024089,0.9010722087823286,-0.9221770232553732,0.195460254940555,-0.4099700546624225,1.1490001019963707,1.8384807455510173,0.7163590166752828,-0.44416461009114205,-0.24210416885775826,0.9783614881327461,-0.9561477807742692,-0.33210914553356696,2.1723848204081104,1.6100182359973576,-0.3891689762579794,-0.6985898337689727,-1.8011119161097973,1.041359559243038,0.18089636519332025,0.7986584254391395,0.052764632078247886,1.804912610962391,-0.8597969798491534,0.948408651650993,-0.05023129971928607,-1.201881004647024,0.4121215193791216,-1.0506482077757262,-1.4270111535708323,0.17302660581715681,1.231415063151098,-0.2903988087264415,0.7166232638520589,-1.2637271055784685,-0.33126810708521137,1.0107386640927534,0.4700685084383524,0.7678559535706866,-1.0212405075384745,-0.09788959995083953,-1.8648182646892477,0.9276455340909944,-0.29451311412426906,-1.118019377594341,0.29160469834355696,-0.2816081909072387,-1.590349254968152,-0.38634832281284104,-0.24801096809183065,2.3865422302709014,-0.6269086219185352,0.41085990221675717,0.6807032274482365,0.8938115397786991,0.18930953642647486,-1.0083739228492499,1.542734464110449,0.8185223235918326,1.1841412828100584,-2.4504693651225224,1.1545066648622146,0.5433759692799344,0.4778382184114399,-0.4645049819660372,-1.2634080574587172,-0.3096365307817275,1.1673188293586005,-0.8927420444634544,0.7435470231579746,0.3736149396711259,1.9546128517769648,-1.8091834050048172,-0.7177789254271292,1.6342371797231607,-0.31502950669704777,0.7251208560295883,-0.7781662010952272,1.462278370228609,-0.8339535356258082,-0.8712573339893722,-0.9606267383321632,-0.04422070308051309,0.482144744583703,0.3918116163322144,-0.6866267637130382,1.8489701328515926,0.917103904237334,0.11873253605436908,-1.0434882877688496,-1.0964682379987765,1.2308892799677464,-0.4262737892806198,-0.19611139026817384,1.8412261002231947,-0.9284485116448791,0.42768479121017233,-0.9741470819845041,-0.6100177269549724,0.7719254034062851,0.5838473332295725,-0.44607152637803704,-0.3721164049826694:0
-1.6542448661304765,-1.2131571542060737,-0.29939324201985495,-0.007743377026725451,0.13746960032515826,-0.9064807263998176,-1.4489459220880159,-0.5838717539730459,-1.3116058767957215,-0.46517022526100604,-1.1455580466515716,0.20169682147509893,-0.3548201314130713,-1.0692612406696405,-1.0749600689639272,-0.8650824061057633,-0.6515308584550448,0.9215643616026082,0.48537310277110773,-0.21134596733280675,-0.5770811828995792,-0.34709077643025954,-0.40945792136498904,0.9313039130805238,0.4631793397504742,1.0114486924354125,0.5938105417181385,1.119596146577484,1.224462603545811,0.9337886597899203,0.13964726821730622,-0.26602202747291587,-0.057936412301474116,-0.019487793845424175,1.1620145899710224,0.5639663934445287,-0.9760254085829418,-1.3171085555017408,-1.5789514248706418,-1.9196811242851364,-1.671260505911804,-1.245813018460829,-0.6241861179322477,-0.5194079208002357,-0.5700630595766625,-0.47177629477346006,-1.056526468073777,-0.37939165888108867,0.7418866833456976,0.42243362651557326,0.3643655548415201,0.1628958611767905,0.9346406102410978,0.4996883637420692,-0.1497557724266369,-0.4950976758881412,-0.5072451383760724,0.07726965737582236,-0.24681007326549423,-0.09914117619966291,0.25822335905699256,1.0115495773408902,0.8377879619012757,0.9311770484761474,0.7206821643024341,0.8029573795623527,-0.3444396057277028,0.23043402837410576,-0.3288486689510399,-0.06963071180241506,-0.375384378338963,0.3048319965287562,0.06259510662494722,0.5331369099870717,1.902971075593606,1.7708929683104497,1.425397216067898,0.6698362039676482,1.5571227198079267,0.5075090262956583,0.28489806152643343,-0.2151655832838498,-0.35836383792054016,-1.0371155965265213,0.21471470302967344,-0.9047743643207238,-1.5687800768137157,-1.2458509109971811,-1.816964771301874,-1.6774092695058853,-0.9870616877190185,0.6639505145716982,1.3756050338479526,1.9612011853280227,1.4090953085562488,1.5439668526583001,1.1615543488980427,0.7078045226546176,-0.306550531779073,-1.0633003753653392,0.6422845077869066,-0.03882200552466619,0.39941899792595864,1.8002949577764462,1.1617598090764734,1.3146242024801085,1.0344439862131316,0.21325718543286554,0.04395496116497194,-0.5970408322066723,-0.11375097561956454,-0.32808976683155466,-0.7090147842305865,-0.23602388665710172,0.5872833481337943,0.7985669188270832,-0.0009818553260665386,-0.39858783906443895,-0.7622244519195845,-0.4634209707340965,0.6837844716141731,1.3279912540892944,1.5252987141109233,1.7073250249382828,1.7471327135485146,1.0889504477976897,1.1758449673773708,0.9222229356921138:1
-0.14240146169079565,-0.8061023332210548,0.637809266375405,1.0835232275614946,0.21260991451798153,-0.616154248703897,1.1153422950776029,-0.3756244838627345,-0.14450826346600606,1.1971433420261095,-0.3358791355552845,-0.7174208560050943,-0.125633461840657,-0.23955420993239065,1.3182716917657484,-0.7357669555599405,-0.3714730672068238,1.2768607332522839,-0.98119729625404,1.7605626210805552,1.1004601819017568,-1.1300148787459168,-0.3316014098809631,-1.3537143639588054,-0.4197474941314711,0.9260345451282243,-0.7298694162461767,1.170602278315224,-0.4700010593632935,-0.9803731831008125,0.40970591853435917,-0.29278684102541386,-1.1957522154889495,-0.46752647058744495,0.2114096873944805,0.3429735808913185,-0.5869952442977585,0.009844823970344776,1.4655576134135437,0.8364896407088166,0.2847640826178233,0.6674676416787847,0.05925967595547924,0.9000953090528793,0.05491114292644097,0.07394934373644407,0.03330839731461745,1.7971313322833857,0.37693504392403077,-1.2682801273425215,0.3323250530701796,0.9477402310207893,-0.7228382882277669,1.1220390596670133,0.22845528609438737,-0.014101993302935352,0.21832905742107148,1.7251935921189065,0.40872532314444904,3.4229180019295846,0.2568922562982248,0.3039884209443976,0.09597509678285379,-1.5650325316062137,0.6324845041927399,0.961386392620295,0.22674701487572563,0.703820771300498,-0.0787767611625287,-0.6409436759450463,0.28706782912267087,-1.1762781423400612,0.15082850587449628,0.11706210379979196,-1.3171485337163362,-1.3967756348381417,1.492280766018699,-0.6594745423007973,0.9869622711986041,-0.6844227835224341,0.11960747685689486,1.3219496967601998,-0.6553126656626654,0.4777992052936289,-1.1043253744709758,1.5122487094300703,0.012830688601036842,-0.2041380996125154,0.13768502075351546,1.2630267631938439,0.7019991560447039,1.0412716887682762,-1.0136486486413239,0.399295026077071,-0.37030464456556744,-0.05119435730945412,-0.8612183841433885,-1.1972120565093922,1.547229702671662,0.31294142590201995,-0.7541531167927948,-0.18748208553348214,0.2174092379945007,2.2789813711650453,0.5381311384680998,0.1897311420982537,0.2641250577268799,0.5486784923090716,-1.1605681534727124,-0.6559124926195754,-0.3554687906959814,1.6556550892422404,0.024633974216003173,1.8331861745547766,0.24018100316976074,1.3781689362585172,2.0106282272997977,0.5930582273525036,0.2326408905994348,-1.2201049200310177,-0.04290779990676494,-0.09161656298271592,-0.28167248967760966,1.2929777075126,0.3912028433902115,0.20076028910763166,1.7574812262073993,-1.3323376674306253:0
-0.15039225882830773,0.3115685717939134,0.07420901461076934,-0.4240429542595873,-1.0395056189725587,-1.462442185000837,-1.4642570164125988,-1.0648579232126836,-0.9295188295640748,-2.830494813559203,-2.724196681432338,-1.2199117751370818,-0.6364091647351293,0.3874052567124273,-0.03843748998726104,0.7079864246136006,1.2683333411768243,1.3418605404817492,1.62568070279156,0.22204187308626233,-0.054216630394242765,0.6671593852347476,-0.4534436451362438,0.6202943610856246,0.016105606377573967,0.2721469941454719,0.21974218919371663,0.008326887540666794,-0.11617534091191493,1.864466387444438,2.2135219427372745,2.3578404640835,1.3644191867570756,0.9371208761358545,1.3673879988467288,2.0206141994497893,1.621270171878368,1.60016355328549,1.6828359975894795,1.638149186525356,2.160195321241066,1.3551064501457684,1.5518062805967432,1.2944821873503667,0.24028720162826744,0.04028205103757862,0.05541507925886939,-0.41398869622495554,-0.9378342434968876,-0.8421342498874791,-0.40528756483649087,0.18105071647077453,-1.1859312532962782,-1.4119227511975239,-1.440877311388894,-1.9264931229518407,-0.7833765452758259,-2.1764150733504017,-1.6039892370797646,-1.17272936167732,-0.8917152187947645,-0.6373973797544388,-1.5776436435837227,-1.6198633693687867,-1.3072647133759412,0.26850599861689317,0.4175383936545609,0.3829737913468869,-0.5848552315032864,-0.1505676121536937,-0.27596903533769856,-1.4398992399784976,-1.2400444166887985,-2.1500788179592716,-0.8605786468892735,-0.39001906950304177,-0.5005484123087917,0.006908105896752725,-0.11580795812755053,-0.6532666772168717,-0.7080311120806064,-0.5097879938394001,-1.3365948889390318,-1.105920984117102,-1.3767348184075565,-1.7658313811154394,-2.404297529178044,-1.3331885431678665,-1.4522992914315673,-1.2080472881380016,-1.853658832612127,-0.5434771342639058,-0.8815211826167539,-0.6667304034228692,-0.6622642027078008,-0.5684053478109241,-0.3879997466796963,-0.20317473502294658,-0.15655969182899038,0.9216224509529859,0.9384572113052435,1.054650791318409,0.9546118370084764,1.1647702034146006,0.461029041462118,-0.07310097936038185,0.41939906391225545,0.5086575479210793,0.46374915922523263,0.06478430943730107,-1.441323074781403,-1.887101631161455,-1.550484314893426,-0.44208379378603935,-0.5859208264334619,0.0216046536170052,0.9350909334129338,2.031717460060763,2.4495132140738023,2.018148052801217,1.2659023943749728,0.11464880236987895,1.1288993177708901,1.4407443628046872,1.1237625508587104,0.6407670590003993,-0.07810635274954336,-0.70113421976356:1
0.9462330262464294,2.059905313958838,-1.4924777486905623,-0.28105196337727867,-0.15325816039065343,0.6956723635698709,0.5924471046060438,-0.20969605993988688,-0.15115428219188307,2.0021225209242384,-1.1174023570811287,0.23551967047604191,-0.5417223733061907,0.4512860677874426,0.32628602879711294,-0.5204674257332641,0.4419527861894009,-0.38087796029713283,-0.31531064837902917,-1.5127693757850154,0.22836001933364042,1.3270456593278037,0.2548181054166272,1.384090267559295,1.6554972620249873,-0.26158219507556696,-2.7551858954578576,0.19421882051594513,-2.0386446389202413,-0.5646816064799246,0.43122404402969733,1.8180904413246286,-0.05892080401069552,0.9319762482188403,1.8136476433380107,0.7227487255993875,0.525240024444765,1.4536540648539988,0.902411460896113,-1.30385896632705,-0.9222871985107105,-0.2071214500667725,1.3318591643743067,-0.27611751340254936,1.2631469136713105,-1.0552413288764464,-0.25380309697857206,-0.8029654596453628,-1.0628431906377676,-0.47975713643554085,-1.4373349078296163,-1.2004264778728166,0.40975229098436944,-1.491365924457727,-0.41004903575782276,0.23228185709763496,2.31533950202227,1.3598656000293612,0.6683049731237172,0.8749125499719843,-0.7973015875817357,0.20001361897495248,-2.010153037150647,1.1301624487628599,0.004545245959738941,0.5652526549798569,-1.67983964780863,-0.264146102029694,0.7784448828897991,0.2823682314860442,-0.3067433196283794,3.048044941261113,-0.9388533799980101,-0.563935907503557,-0.33140479085013735,1.0467579683700128,1.3889846149036602,-0.07692092489921633,-0.8260820373101574,-0.12904317029386353,-0.22666102958545,0.2438598949248998,0.4786453676973809,0.47269390811494383,-0.022448371936211745,0.780381661677886,0.5735866776341455,1.9280863674306292,2.573064435487862,-0.24128979888438032,0.3093629028422542,2.406581428906215,0.6688787509555153,0.6659877775122802,-0.4908515775265549,-0.6723058887698299,0.04403409556593079,-0.8312576631806327,0.32655119613308786,-1.5150047966473328,-0.17116922160602632,-0.33885558715821806,-1.3426105698451782,-1.1233822014040642,0.7592909837865662,-1.8120121799911966,1.282395971281506,-1.8057534291179436,0.26450683094519745,0.3026395081317542,-0.3287672716274178,-0.14325399233150654,-1.5269325768767272,-1.886599925213005,-0.23841310807482757,-1.1137544667771977,0.5310889316440097,0.6354893946836309,-0.04532298131299928,0.6780681337253742,1.0081985478720208,-2.079394810274874,-0.9282300503994045,0.6053604008532054,-0.8095323250716011,0.9545066284501611,1.7017276820698461,0.1854152822813211:0
-0.21600597460150325,0.17738125387179088,1.3807248090711555,0.7921091799471982,0.3340941669704965,0.0900764160749071,-0.23294731808943556,0.9318494342862673,1.4815778673764544,0.6208050671096758,0.4791713473467,0.39563691055812034,0.5237780775460835,0.8133764723012522,0.3628108294754622,0.8130269884011811,1.6891890129391733,1.7866741645150603,2.634922997261472,3.103531784994282,2.7420800605854243,2.63444495398786,1.8797823212589784,2.128264797356115,1.283646844891602,0.8211321252206232,1.9839508489148117,1.9711152794683304,0.8281475610360101,0.6069976281718059,0.7807153009405581,1.353481038288288,0.9227955446190539,1.0346828286111043,1.5646333528071406,1.3114568591754987,1.317339135856872,1.9252200673650233,1.1129807894998676,1.2906052853009964,1.0539362323418497,1.040652382739219,0.8262472822026871,0.5429156683726563,0.2274293693712866,0.2556165433898472,-0.6949951864897339,-0.8793353006852181,-0.12557796575991453,0.7497050094453452,-0.10142971057638339,0.5496566025237307,0.08337112750663472,-0.2962328279982137,-0.17495763046208662,-0.06235512589464523,0.004168388392867865,0.5928624531901163,0.8615155709255093,1.1472590205276214,0.5436720359531992,0.4589436913412946,0.6782217379565159,-0.2674889157039173,0.5747459619847816,1.3542798683609851,0.6152033501705929,0.8767645492786914,0.5458494723531753,-0.272642029586124,-0.9930876542635063,-0.11291649132334369,-0.016215676848555738,0.02807305323193468,-0.3397852449149415,0.4444851397699093,0.7110774519599851,0.8119809732630211,0.24154860019344093,1.035029456883299,1.764214065455791,0.5447603738634442,-0.7370791447234846,0.014447184905023946,-0.8666249424532859,-1.5180378154561023,-1.5818985936692727,-1.5591469898327714,-1.1110343691102185,-0.9494891198460028,-1.5250586565627902,-0.8222224396969597,-0.9442510236309132,-0.7743830973053163,-1.1027212183224802,-1.4244721515049694,-0.7514388874557314,-0.8258063331073295,-0.23481531497681596,0.3117791103044367,-0.2862732923710193,-0.669668579677461,-0.9770537500271728,0.08613170987148755,-0.6746291293998079,-0.8542608163675631,-0.7605029417433461,-0.9978575423321694,-1.5096693010612918,-1.0418785416956255,-0.05467588826412406,-0.36569839711275465,-0.4725054515790924,-0.44238745808585556,0.8316270851387109,0.18528391961171303,-0.18675890277086263,0.17747436713184617,0.12272119327969974,-0.4778350479903028,0.07206968419033616,0.3240551720614658,-0.22236567355705394,0.3627401081252697,0.42226643529306074,0.7105021739192512,0.5772471145360469,0.5686297573832333:1
1.1770276613488346,3.1390037830130133,-0.4034573360015602,-0.7699647723446458,-1.5239488390201645,-1.4773692868437742,0.6853435393908324,1.8792919535312869,-1.308083343810195,-0.1548666946024771,-2.4470781777455484,-0.006900648514180076,0.8968094730896172,-0.7850523861585651,-0.1650232913408507,-0.665490444749047,1.4496483427042781,0.5299740478439229,-0.6638293766157789,0.46823800254286846,0.7982147137273606,-1.4668130872536143,-0.2221595575663658,0.010304267083217331,0.25100508341953853,0.34391217156835646,1.52924818214338,-0.4849543841782119,-0.03274345612951963,0.5695601806106839,0.44708936299941177,2.765388004582078,-0.05342045435391842,1.9168611037626833,0.5452143790476723,-1.216721459594494,0.732881285162605,-0.8030700022095185,-0.7677052091400476,-0.9255998184357537,-0.7402380001551281,-0.08095720441405818,0.9810019554918209,-0.648250092035319,0.5056998492886907,1.5325802742061982,-1.32357556107162,0.7629240835599078,-0.35890928767579233,-0.9961554651179793,0.6656902281522573,0.6876317137884432,-0.09984866705304964,-0.2638743401600214,-0.2582740468375238,0.14061364254629083,1.6939013490709878,-0.05757757984109581,-1.7380871070087558,0.29060812443948203,0.10237659993387897,-0.48283072159618395,-1.7999650599938795,0.1277571761778827,-0.2445470270287076,-1.486224311257122,1.0176299877674404,1.7235955910946348,-0.18429420769240082,-1.1971425411994194,-0.89860926825235,-1.5497323948462898,1.364101992389628,0.5977817148389124,-1.1070433909073059,-0.6217548345100236,-0.7854717211179822,0.9900787247383628,-0.2556815059119606,-1.0276159514695038,-0.30417329312666813,0.7972489935894025,0.1540308593332539,1.0691422278270715,0.20649561044528922,-0.5396128834663516,-0.4024802729771724,0.4234311203250813,1.3845210700268216,-0.40908095545230755,0.026656487229112766,-0.6323063343272886,-0.1126609275363583,0.8413418175126445,-0.7902010090166943,-1.0797048866738663,-1.4859719638308866,0.6440144708984024,-0.10496354785046323,0.10412096414072458,-1.7301217403452387,2.0491571505387465,0.11398028193139274,-0.6140575625358288,0.8289781147633567,0.46769425008887655,-0.9893075397793938,1.0517263005752262,-0.43685083490589494,-0.0421442646231289,0.889285210083875,-1.0520605176835756,-0.34055108642764176,0.6430915833413707,-0.8403998293341528,-1.758925219602116,0.07436994141576628,-1.6549933840563629,-0.5600387631051402,0.32605603157173213,-1.1438756986916363,1.118736314176396,1.8163505462241245,-1.7442371986889527,1.4153309217231504,1.1749455098520178,-1.3162898657157824,0.010771782156294407:0
-0.18597631120527516,-0.5403102445216944,0.5971338076161843,0.9978084362402175,0.44982245718835634,0.8444807172259112,0.9473498974151053,1.05584848103326,1.2920824222523588,1.501400038604865,0.8579538306987216,-0.3247774150846823,-0.6999113950437434,0.0729044638050349,-0.13685262373188606,-0.5002613943140531,-0.12010254112397595,0.047511502346163026,-1.4249140713522384,-1.9739775820293932,-1.3683670472779854,-2.0036053601444057,-2.7338420762668245,-2.0142900966674135,-2.9872444499305884,-2.437587539851366,-2.7797700200613207,-2.6579917833749134,-3.0079486503186987,-2.0157025272000952,-2.0422068355970064,-1.6404971541440578,-1.3405129859973408,-1.2149765873352851,-0.9015740323151672,-0.545772604245308,-1.1731186881505822,-0.7225271053268983,-0.5146664679872782,1.0107059814653492,0.3118973956161399,-0.19146517766332136,1.0080243511234444,0.9189654064117169,-0.31119105249308987,-0.7705203144636599,-1.5043229872190704,-1.4349420693612767,-0.8082368595054941,-0.13675270504653492,-0.014756318366294152,-0.24293249203775943,-1.1283305833961272,-0.5830323521705767,-0.09047806394418023,-0.6950465115792109,-0.014970789224520886,-0.0820944458955323,0.8012531211589747,0.11536426839822567,-0.23606550306066149,0.6256578811444803,0.7119668510032768,-0.1745918213082549,-0.13635216202039763,0.2879530309492961,-0.001853736251093696,-1.0211484167703402,-1.1927375359770993,-1.2891939590113823,-1.017349376964571,-0.3808601425510519,-0.4832998285203596,-0.020771715757015363,-0.28724970373391706,-0.037527092465966666,-0.4902234204179019,0.4405294343817573,1.0161878726534694,1.0861769909168857,1.0145071780252126,1.2446356946186594,0.28081481635152983,0.730977317988396,0.2961464545121456,-0.5564834903554272,-0.4609949897854472,0.3856284926791921,-0.11313494458361906,-0.10571153750573706,-0.575150560582712,0.2358879975887339,-0.32373942346715245,0.45549656926737975,-0.9889496963303648,-1.0428697648104248,-0.6214603728976854,-1.4946056679501418,-1.2847496483055294,-1.4194246532787875,-0.9047311668873512,-0.07606305959972448,-0.2378884087289133,0.27168912212054974,0.9697659339365512,1.8487848916663352,2.2119347649097745,1.6573732482833767,1.4852270441866198,1.106619272871652,0.519577932018463,0.48967598103058907,0.11659279646585119,0.054778234674508944,0.09129324185623497,-0.6029363005253157,-0.11986495151891913,0.08900226821100556,-1.0000646069000578,-0.5047975510556155,-0.2364974210990268,-1.0991333458254533,-0.8223616566399511,-0.0528709101197995,0.3234729010797686,0.8781069552667587,-0.6995576307930317,-0.7627373607003463:1
0.4381031237020645,0.3524334033830611,0.8549482406924087,0.5677866022225481,0.19842133099230203,1.722463343133921,-0.5629747877230065,0.25629518427588754,0.5916534337526854,0.7143926832461078,-0.31037602228660677,-0.23472025899046647,-1.5365184285219111,-1.6344006655758079,0.04393216308770319,1.016026611303902,1.274482399063926,-0.8869970554641077,-0.3005173938001682,0.2729464619639346,-0.1108480060656622,0.548597257668578,-0.019799633385292833,0.8801925736155767,-0.06492842433211266,-1.2678603030681048,-0.486968254864124,-0.29229824519707553,-0.35531624418341834,0.3242243060398575,-0.18459039893958548,-0.2104039931442091,0.7605528910471895,-1.0128105029292802,1.6474996759841725,-1.2681259272452947,1.3014044707550152,1.6603757989641053,-0.7392323306653698,-0.6913422281322191,-0.16300880018676397,0.534284810536192,-0.4583238804261938,-1.0665756212013673,-0.22461714460157434,0.05603276249079026,0.06346703449493843,0.08809534776727473,-0.4012603676738961,1.55781600964535,-0.3244815958091986,-1.230770052636827,-2.583562102356916,1.9936410600717587,-1.0266520801806525,-0.8825641505301377,1.0388163259214884,-0.6828212770624081,0.12019514097803204,1.1344432123183814,0.353131847309052,0.3462133178437786,0.4654228221408136,0.5455700016084779,0.5275906929993712,1.1922791773876429,-1.3936102492447067,-1.3719824402890153,-1.1023475080836391,-1.2887883302772298,-0.5499858757651767,-0.3588076390033752,-1.167188385279453,-0.11370001813815918,0.45079930537629165,0.9754600771424504,-1.7278690677867417,1.547670080562803,1.47961530052871,1.1195842343436682,0.17251160525234124,-0.13882593661530954,-1.391336104950796,1.3472597009528973,-0.450083937085981,1.651674185494871,0.5147102271881256,-0.44742947908536995,0.06115825448531714,0.1782754936684004,0.32735335599302384,1.071075376676864,0.7515209676649338,0.4434289028397819,-0.2728863067098026,-0.7436082904516532,-0.4567161322193338,0.7279701340227,-1.2942571221137513,-1.738903073247307,-0.056026978621865356,-0.5557821333408112,-0.29873106759985946,-0.7488024299453987,-0.47475343709105056,-1.4891329894659044,1.130049366005506,-1.6708856670352512,-1.8457657594341916,0.2812600399286484,1.368237494355774,0.2595115208010305,-0.7340791405185942,-0.30592111054783777,0.2530568059384315,-1.0278376081964193,-0.03314363961248807,2.6864871620313955,-0.9365537861205666,1.3378443716018504,-1.0706410060309792,0.20760991496051284,-0.5227560837174987,0.38004158005932376,-0.04108695923424083,0.13724428649234544,-0.8174536029156171,1.8146964405364499:0
1.0722454923601483,0.8242523654749929,-0.43395277774708607,0.1464775017723679,0.39353591430168305,0.26418341997887246,0.06527236568982944,0.9573020420473113,1.1914824026348314,1.3105325720670693,1.6637621162172924,1.1439081442691936,1.8817324413401484,2.0372879667081634,2.0846291447611405,1.0768325833708958,0.09284519069927466,-0.4983176297369348,-0.03471022751023073,0.6928951639538139,0.02557969668487159,-0.533426209836869,1.048997726415988,1.124318056872796,0.794772395369853,-0.1757298069401727,-0.17744250407056644,-0.9104818212613921,-2.0264795294903584,-1.5889343844291843,-1.0423646740067645,-0.2675635089120244,-0.9118142330007475,-1.1018567728660815,-1.789051479134308,-2.2012894674766286,-1.661507019111767,-1.6056395746214114,-1.5425414498790353,-0.8642684526952094,-0.3409424039147697,0.02623322022968766,0.04115434398797711,-0.26147981525681285,-0.45015943383768087,-0.5222224328009943,-0.23370840430702763,-0.4900497755035593,-0.21540624872960532,-0.016690883115831334,0.9615986910221395,1.3947348832942024,1.8289760263253054,1.8835043942440688,0.5037075442945684,1.2731142353163776,0.32958221376116326,-0.6166035526645531,-0.8109723991649861,-0.6772202964815957,0.5441542640683315,-0.8047610248341805,-0.4629761659615348,-0.3849812654720987,-1.7854495787889448,-1.59007054281029,-0.993564131463109,-0.3499503976845364,-0.5585492338701903,-1.3274404448174044,-1.345978674781363,-1.3637842854069901,0.15042928823136958,-0.2841279154851787,-0.05430016045122382,1.259488956641375,1.221105875933928,1.1373160824856619,1.26595266929282,0.5711908413676163,0.5359905451338227,-0.18462430492899307,-0.9445277205840922,-1.9146004921729447,-0.9851361113000956,-2.437785918110669,-2.662448929025719,-1.151810599150028,-0.5806363669732901,-0.603848649050096,-0.7767798367486848,-0.6674094641123655,-0.763197433973461,-0.3217692469191578,0.3206174170265692,0.6691723346797431,0.03171995053418364,0.6209020269921485,0.6994938861881779,-0.3379419302409574,-0.06520637158149531,-0.2172029117913892,0.49970280467459455,-0.22355870733305078,0.22488969965188885,0.5440042193623096,-0.05435669546545202,0.7025223070702306,0.7537120485236987,0.4186465271869475,0.635387676834707,-0.43962764899216156,0.0371401812310978,-0.4471869613707094,0.37208018659962316,0.052499636773220226,-0.7385052833274481,-0.8586136333465579,-0.8423610280150393,0.5420278019894201,-1.2714045195973367,-0.8935606855665605,0.6526125396977267,0.49517576352705595,0.9534124741061404,0.5094871208171063,-0.004675308715551718,0.0693031157029966:1
-1.4815888199554208,1.5355710469886978,-0.042812421018693,1.4984734849273482,-0.603234399990507,0.15033762778334156,-0.15207572976887895,0.8758622705294564,0.5669048487164672,0.1324835319255901,-0.14539424360641987,0.5866367245307891,-0.884545579733384,0.9969076322005368,-1.4244125407250046,1.320588739981367,-0.3891069379112882,-0.14923085657266638,-0.6194348593507263,-0.14060656797466348,-0.9649123976481214,0.3661806820792317,1.5923107172248865,-0.6353389100231549,0.12183517559393178,-1.1182143366759931,0.24046494291561912,-0.985638836178734,1.1439713652153842,-0.7726581361720366,-0.20992676057711665,0.7952246297631006,-0.02007692698900433,0.2905327125506483,0.0657938789499305,-0.9981494969608947,0.9231148636931924,1.7772119481042241,0.22554182360154465,-1.5485711402277542,0.7039165014107341,0.8562327560164815,1.263253604556332,0.658867032384035,0.3581698290034932,0.5476355845719596,0.47616011753471926,-0.7421475822795675,-0.5408590303357504,-0.08062630244248314,-0.045738930361415596,-0.3116601753258648,-0.1945427734885273,-1.0212807069674714,-0.677559428992984,0.1213830696219653,0.897889315929798,-1.1668191982886726,0.41821694725934777,-0.48575602906018506,0.8364390948723606,0.13033047449958254,-1.5979811349842523,-0.053629115550874025,0.2599880546657273,1.6577786872206213,1.7603184834672656,-1.7034609768570703,-0.21132744284526872,2.1208805710664778,-0.5769749945822449,-1.1810879772391916,-0.44106438564496225,0.3404400760616624,-1.464617831429475,-1.6285032791116723,0.008674940519636696,0.940315274791386,-0.6462241618268231,-0.592687866236197,-1.3694548340400676,0.018095358906666675,-0.18892971227719174,-0.2622648114399141,0.10394297643604701,0.2100239369741713,1.1888648782604387,-0.9009534074506962,0.36438727651428165,-2.337892471586993,0.0720143228998,-0.7332858491122202,-1.2906325862037717,0.061248270787150394,-0.9390288287964303,0.40386013048391806,-0.5015414508216796,1.0811491432905243,0.8167818472821586,-2.456598667969781,-0.3187277281918482,0.8136907692703087,-0.03653525626819552,1.1782782443138324,-2.0392173986459947,0.3366861249483166,0.5283566657468117,-0.457122037500628,1.3346530270652173,0.7210374068223874,2.004419915418767,-0.02344900981705161,-0.15556576215394363,0.4506787037202812,-2.814457442883734,0.007108413037423963,-0.5468489341038172,-0.042772760954501075,0.18807288420930032,0.34730048268881647,0.2439351006618348,-0.1881583947487886,0.6794831735441295,-1.6783199954273496,-0.9434339837530424,0.7274105267618106,0.8155536798566069,1.8030371620079442:0
0.673123271744646,0.7020318376278782,0.6299972774503816,0.24814262062846404,0.2753776032122911,-0.0814290715260165,-0.6691923423316406,-0.16042886671443635,0.6532508733374471,0.47408351597959353,-0.7212773661876846,-0.18223057670178644,0.30571455598600217,-0.2242277364601534,-0.6402085070713045,-1.5805933574506117,-1.473713524325352,0.0017058532218146016,0.19193596817753855,0.8199387948630941,0.15946740026287204,0.3785076628401409,0.4143498112444925,0.87573600400077,1.2409432784320393,1.6699796094311683,1.8084949437102162,1.2509997007493088,1.2748067368389266,2.027145075097169,1.3578449849031813,1.287154835677538,2.193866903600348,1.1031497024453631,0.3279316219953671,0.42265951765289334,0.5418912673433016,0.8986133301790253,-0.6358922760228712,-1.016327053384711,-0.7505860845769731,-1.9632510792903584,-2.224645058455177,-1.6386002086680658,-0.4775344353494464,0.25481681468284695,-0.3555081684857786,-1.0265004700237466,-0.282925240755296,0.08615456741079602,0.41162333557885034,0.6314622737952456,0.3268048246339691,0.37095219977181465,0.37589111277512033,0.7963682752726121,0.612990867939442,-0.3992580330021075,-0.16527628474150188,0.039878578449637214,-0.5258637937365073,0.05820703791418985,-0.25817097729296135,0.3134509226842398,-0.4508293729946812,0.09595747012191536,-1.0339796791317526,-0.2712027151357588,-0.7114168103371203,-0.5825010267227194,-0.0386260104410045,0.26559718665805676,1.4280590666832265,1.252047595808667,1.4929093345601345,0.8907480397429804,0.5011536207728294,0.1692928296571348,-0.28009697252970167,0.41963537198637935,0.5761619171790253,0.10577116426563443,1.1884053582597722,0.844688506049823,1.809141838526577,1.0437435695837132,1.9312551164056757,0.5052960326589067,0.9401722309356264,0.24364650288942136,0.60241673508257,0.7300620360473973,0.49941164319636344,0.47906272434926256,-0.4321020577583239,-0.5664977064972841,0.4134293276515079,0.2117554379112384,0.4987297299640875,0.442379563965388,0.6972002243320886,0.4326317012084048,-0.6057385947848838,0.13470340451475182,-0.7927131838487539,-1.3306909636844009,-1.0291385300979468,-0.8405110354568034,-1.1607865316843495,-1.1672155541051565,-1.4104058953647995,-1.092820200047872,-1.3302385127214484,-0.6739255007066451,-1.1793659356522967,-1.4026127825441574,-0.11965714647958281,0.22605528709196054,0.1854184525808888,1.0819884165254408,0.7833719135888663,1.1160748362106643,-0.3369051474079441,-0.019476887772268525,-0.19967555924566002,-0.6366896208208592,-0.9451691220397538,-1.1153125816410376:1
2.786285657711577,0.8144449202392078,0.6418356227197198,0.22025578075759977,0.15371261692858987,1.8160026153546578,-0.5374906416737284,-0.5073075174523312,-0.5200415338323879,-1.2776473799361057,0.01653235905993389,-1.123627013122854,-1.0177064078768885,-1.2547777236557733,-1.4858662348020535,-0.49846096450287575,-1.1001667992600699,-0.3292579028887488,-0.4778562668609389,0.7958773757490883,0.12648592896482483,0.020847655510683582,-0.2662639902963994,-0.36568559071174894,0.44873714261731723,0.5136706206435222,0.26871214649801717,-1.850285598770352,-0.7900238837338843,-0.005127563368174711,-0.032717513201241576,0.8720180135027661,-1.7735209417603475,1.8635942630527016,-0.12671566986381771,1.3743998087357367,-1.3652372659406078,-1.5487059488857091,-0.5126572118632464,-0.4136641813583054,-0.9553262920758491,0.12062795687720096,-0.3912887111121967,0.5887641411443582,0.027358525339991214,-0.5625151451007151,0.6745477072513028,-0.605932553942188,-0.5514997904699761,1.0856760686616935,0.806165089632935,-0.7200628424657461,-0.4941250416520855,2.04521132037687,-0.22143067771862404,0.010945328762566991,-0.989073700514246,2.1203199472278675,-1.6111910243773613,0.47172771502111205,0.13909729349696354,1.7580684806475817,2.442525372709257,1.1163641393188606,0.8933087154273139,-0.2310286542092079,-0.2223900043624333,0.4801148925961346,-1.642453909527361,-0.22936024250172946,2.1544224269071033,-0.3016634994279885,1.751938992293847,-1.2447562143244442,1.220335931640728,0.48425062375217914,1.3368236520661967,1.0246689722452649,0.14981100083634966,-1.6951455984193364,-0.8635040068739852,-0.241928500931096,0.534146360220377,-0.9527052582969823,1.6371016865224248,0.5051989945476277,1.4936591342672296,0.267382552704186,-1.0663180318840129,-0.22309261990944726,-0.8855140496214151,-1.0310472357408924,-0.591829968528989,-0.1250076508912785,0.4326934785005443,-0.129770663003463,1.818305920550484,-0.4821144057809287,1.263773099219814,0.07339063087501227,-0.44541426131536066,-0.601963899358078,1.3713316756667082,-0.5918810987785982,-0.9905436624820368,1.3992561026645254,0.4007518366001232,-0.6563040048498426,2.2361442269730016,-0.2562394281527441,0.9919333559872076,-0.3521510677911906,1.0632709177919193,-0.007016647127286237,-0.23801205523049812,-0.42236079309578384,-0.2871256106966417,-0.8409382333423656,0.16092400615480515,-0.0027847314917237628,0.3395325291378341,-0.7339296720388246,-2.4261251255471366,0.762801969950559,1.0985241614389696,-0.32528675671727375,-0.4025656003593793,0.07447710116478343:0
0.5724182525488428,1.0592227324957881,0.4595484379875275,0.3786136241427796,1.1211043511051648,1.0615892435518188,1.8676608658252865,1.6651407699208112,2.0839608801056757,1.7224019615505948,1.5150381355148566,1.1254109157334247,0.5015113037767795,0.9918114754726162,0.26515662193298184,-0.4182675679112989,-1.1874663593053028,-0.4937609790049237,-0.5119934051077959,-0.6888707205030364,-0.7728937571345041,0.19032413799120518,-0.5230838604409086,-0.9707467847772484,-1.214129315450434,-0.9654023927920662,-0.9388479657944551,-0.7406905074924298,-0.8231265529807492,-0.7940824365891004,-0.4605825821512115,-0.970983212117005,-0.22319593128896664,-0.021693035411124856,-1.7067713996573302,-1.292808318951368,-0.5654602751980877,-0.26132514477031094,-0.35645292516216415,0.44758854131573106,1.2516420093657656,0.35442043128499945,0.3952685843151704,-0.5786552989377672,-0.9842776839366412,-0.3662027772811522,-0.6339847681512292,-0.5111877076889113,-0.46280835219722316,0.5275641455031168,0.040118110968941245,0.2664491383497517,-0.22729240442142673,-0.3233840628883138,0.9142759322121952,1.0430897616207702,0.6569212492639677,1.7502918835044259,1.09943068086845,0.751704228019024,0.7935437574438612,-0.16562904510520404,-1.2392763953563137,-0.8050764903583676,0.00967749277159724,0.22001917805238105,0.9395990254454162,0.6949419131110326,1.8995054482852614,1.6277210604563468,0.6247392713841596,0.6862240101883101,1.7171313559085462,0.8535988650131215,0.3011144561935135,0.9637961358852958,0.13765381693496948,-0.502677241789795,-0.47781259921919167,-0.1980393080792045,0.038976468690495925,-0.20324207386325477,0.870704404673492,0.7895663138196836,0.9399671376086938,0.2010717123571627,0.6571809787896505,-0.13356793393865363,-0.5984019380609495,-1.1776780706431391,-1.278647330082352,-1.0021361175347026,0.5799217844094282,1.2450777851792052,0.2833908663453911,0.8149234399214345,0.7891603276093069,-0.11137839501845836,0.4571746396639377,0.17766234330387404,0.3025867925551354,0.8054926666029206,0.7233981664357398,-0.06972268337734766,-1.0939131651029914,1.0241536710366956,1.4042841016332916,0.6391301066895535,0.5147557817303258,0.15045976952221135,-0.41957742712683554,0.5216018611043292,1.306973802078691,0.9816403387819961,0.19266009543978946,-0.13421650264498403,0.626661501257869,1.214811168197121,1.3860915430632221,1.5530432701329215,1.6384986603909855,1.010733943919483,0.8136152139119204,0.20774950552625177,0.4684511913004519,0.47009421929380685,-0.0067872410702828345,0.7347703345930658:1
1.2012065395111295,0.5050270060324396,0.8983625996146705,-0.4110731802014117,-0.0316822994843973,0.21202427856577513,-0.4365430113712489,0.400043438110183,-1.653026379349174,0.10543150132130032,-1.1046195425482248,0.822549428014097,-0.26680200737832777,0.6952908828283634,-2.0536072682370663,-1.726565220530747,-1.9469884781960103,0.18165610520358969,1.1990356214429396,1.429337151212209,-1.1545954409877344,2.087441305299257,-2.270119601668339,2.6291933729665704,-0.7519216810436586,0.3245140278415852,3.020707548080225,-0.9178110680570124,0.1181797361923118,-0.2796387563333641,0.0023955809430465584,0.8106104293298404,0.63228116115188,-1.7140191415373127,1.0784964611366263,0.3343880322116977,0.771866366251986,0.38168823047745404,-1.670091255763637,0.33951355973130287,-1.0260608856860354,0.16378202406417436,-1.607935623052464,0.6328510372367231,0.2459261218144482,0.2324330710364892,-0.45848165891184334,-0.1612353297848567,0.6436080362850515,1.2061645105167023,0.10396181243182491,1.9606352480099452,1.1525470506872983,-0.5544477326868205,-0.11476649071668905,0.4945858125381119,-0.15834546956337858,-0.4557189950314272,-0.46236557719304194,1.419887753495209,0.1479171415562792,-0.7460899294279887,-0.8280098456058929,1.1957247673052018,0.7915597230791689,0.7368093387922338,0.9171601079947066,0.9845688881988922,0.1871584206903772,-2.254053162017628,0.6116476986744223,-1.6708558095607287,0.05991013309710877,0.978756995213943,1.2850041813921127,1.0292308440650555,-1.730977438912287,1.037969073438524,0.25793156329161565,-0.01020829108448633,0.18045841762588544,1.5870350720857582,0.5934797041640287,0.5366749140813519,-0.7260271678229971,-0.48742937485357635,-1.9273581172814083,-0.048891908798642886,-1.5303595568720496,-0.7736252544577541,0.07213206049232429,0.26725884376175374,0.4567905566876774,0.37920606950801106,1.2433209034258317,0.8319564116153776,-0.5034837865948814,-0.5580158773038801,-0.7018915266425484,-0.15863951933548245,0.34257689735711894,0.24639870974997696,0.6469717307987304,-0.37063928319208206,3.029527512786871,-0.6154667084406099,0.07740486603225973,-0.1517279187349734,0.4019708175491833,0.23826593083112524,-0.22328837947092436,0.18598015256832037,-0.1255594074963848,0.6719708650207888,-0.5965583492048526,-0.03231740051020994,-0.9447163139223272,0.547374723671897,-0.584895924912917,-0.40213089954293163,0.04759385438987921,0.0052639893450643896,-1.4221550868915283,0.634473797142636,0.3943049061763469,0.1075987268350265,-0.7803412949112364,0.5079429726449058:0
0.027832198813964492,1.1192704743844892,1.2490388682180913,1.2597649401954822,2.0068878405188197,2.1625214390996104,0.2550793469638901,0.32302737175915686,1.5064286081143092,1.8814016282456172,2.4032187483294387,2.56063324978526,1.283418300480126,1.578045542148682,0.2804020051857171,-0.14327943436060875,-0.0067048336149718585,-0.2739264257920243,-0.7208787131812883,1.1750303761147163,0.37658801979055123,0.7978030430718375,0.07772954772173724,0.7814804766469237,0.29366087872628155,-0.1496128048688143,-0.3425185351395607,0.5461402480572228,0.1584769625913784,-1.1185925785864381,-1.8779495960724968,-2.4495203924865536,-1.4368260184076183,-1.8592985150395116,-1.3259783927940931,-1.303826738588337,-1.0292687947860693,-1.3458397174386083,-1.5453531898577604,-0.694053193210023,-0.8719454785747451,-0.9972774264422113,-1.5080312194629024,-1.778453153333125,-1.2837998299207507,-1.83289580369037,-2.436555794387292,-1.8138139550715464,-2.7718759573013525,-1.1960172982831851,-1.137988664045145,-0.9784420271915474,-1.1197396860993853,-1.426277706156871,-0.3722214289906317,-0.9150536159217776,-1.502949407849376,-1.1629610327707864,-0.36293221055403546,-0.7366951949405647,-0.660532135966673,-0.5077213452891138,-0.04461045491287913,0.2546661325597597,-0.6761631563729793,-1.3805260724671307,-0.5607193317687637,-1.0249738041615022,-1.0966474539267659,-0.9948737109361443,0.0586647114223775,0.22993611721809606,0.8389103783414471,-0.3381493729618147,0.24807958427378984,0.5897865329037237,1.3869833255462456,1.676524037441283,1.7466787008664382,1.1337491029385267,0.8728051980076638,-0.07482152931448427,-0.1067981262081927,0.7180416632232066,0.3950988302443622,0.6350616626174286,-0.3780188681167659,-0.2794053556749653,-1.0632005457572171,-0.6333844402741667,-1.2913832016625415,-1.5931513320321218,-1.1348128597486,-0.9132394575048146,-1.7795372382898567,-1.7774642634648714,-1.2246356455608973,-1.5404794764740326,-0.05247169100250315,-0.2785948282856281,-0.23136403958858262,-0.5882212582705028,-0.3609987836268511,-0.35927018544528216,0.296353675471522,0.46982217091859574,0.8968305893468904,0.45349512889356436,1.299572473771737,1.6581278133075008,0.3753457827552982,0.3703381703640579,0.5726718548040144,0.8112653068890845,1.1321653841162973,0.6480642969907444,0.4793629403116221,0.5165939482555084,0.47497700695038103,-0.5456724138178202,0.18183893849955018,0.10115686734201382,0.019390818048323294,0.24196404946875716,-1.3740119751954574,-0.9906621147292005,-0.8195758115471121,-0.2475561284509899:1
1.454978075981588,0.0852103169204517,-0.9662171941348008,-1.6396216361389684,2.341903545081167,0.49366294403524946,1.351917448041682,-0.10507777741311183,1.1427814470297866,0.4073445029865839,-1.7467238120927355,-1.6042253687923627,-0.4652527986307457,0.4019928990766271,-0.6380243249403802,1.3994280833448691,-0.3323491712658169,1.151696993498103,-0.05865853707276017,-0.0821668728083275,0.13414287762436772,-0.8023989121633176,-1.5207517829799468,-0.49216288500472694,0.5803952642183383,0.5494191982277561,-1.1637438786991612,0.20316102604385433,0.3022766113651233,-1.1621244635299768,0.19148899354770088,-0.3001402796075881,0.29457884192419215,-0.18283115330458172,-1.8448594935273006,-0.04473646831287516,-0.32086015463951045,-0.30356622537421835,-0.5913003814856177,0.8815998971345526,-0.12032522199045943,0.45374295262024145,0.560747397689871,-1.5162661061385323,-0.561460348040317,-0.3872918407650605,-2.2079388540335843,1.1828718638878801,0.9358433526268424,0.13795307794201914,-0.5280271805995321,0.8458456442648764,1.3087640473659983,-1.7974181426314695,1.9584627252292734,-0.011759398883786455,0.8449701954843007,-0.11329872393527478,-0.7660823061488506,-0.6356425148894693,0.42680033002394024,0.21505213164234263,-0.2730169541158717,-0.22756224999205452,2.2644901809064506,0.45474599310834635,-2.791315104720925,-1.7652938211354832,0.7536452603626544,-0.8275671021146952,0.6318678989014945,-0.8612580488054283,-0.5257539668853749,-0.1912143548812136,-0.8299005601763013,-2.6295440393029623,0.49373066214726985,-0.36850412037739677,-0.36884510939248183,1.7323689246110519,-0.06452855041134095,-0.31133625454573277,1.5853473088058807,-0.5340397531144483,-0.6070365703295859,-0.1310087972144244,0.289665512744684,1.0184654672765057,1.2285837960498005,0.9848958146559559,1.822631547710618,-0.22601581351681513,-1.1961856109280868,-2.034688036122299,0.11073519252959396,1.2374541033458635,-0.6594041724220029,-1.2294670608662464,-0.07873292907997335,-0.8500617053178389,-0.2999410466398021,-0.9107699573390845,0.13925353247229455,-0.5016083783228156,-1.4699725882473038,0.5910207683265745,1.1549507008116604,-1.853326060804413,-0.5284500929749194,-0.16657437440767764,-0.7647894448810063,-0.24627943007131556,1.560618795200065,0.4256509937906809,0.36056694204096124,-0.26250533705722184,-0.35014357418499625,0.6977439635533426,-0.6141788046445845,1.147211705521842,-0.24490275989604576,0.9597706913500584,0.6279330994990724,-0.535454370218092,0.5325962512869605,0.006626112190247159,-1.5635463130275138,-0.4006249227117298:0
-0.08531307940866824,0.3135787292840311,0.29293072518489266,0.38939662818719745,0.9295771693026678,0.558755008219989,0.7496745280365827,1.4394587620893518,0.49839503004417995,0.45157021113726536,1.42867999317691,1.6236463739477844,0.5090971932583707,1.290116274519939,0.6695163352497049,0.01587332514565698,0.3521241612399416,0.16114240395024126,0.135814322684703,-0.9175715478294082,-1.2995647105162549,-1.503711285473674,-1.4553116505178862,-1.8952508577752814,-0.8966289268978935,-1.5769071100279355,-1.1012643374307702,-2.0911112968249346,-1.534147737397764,-0.6109232836090825,-0.11826936898152601,0.8543796468651256,1.0569672143470494,1.2504351216455973,1.197511278633744,1.428520946760666,2.042578901800321,2.9281432475634452,1.6236721702928616,1.775083314428528,1.0529757116421758,0.6027527117806355,1.5759991840785441,0.4092554177424653,0.06475563713530325,-0.1242777339466756,-0.4087984168341919,0.27491364588903217,0.015975853197255585,-0.6784621055389783,-1.4150358168293358,0.04512349700856544,-0.08478525103945198,-0.39453290983149175,-0.09864516881562671,-0.05220372219414526,0.7490567879128642,0.20468891150136076,0.5099730060540084,0.11602314211997533,0.7598704597815794,-0.04800533347724156,-0.018276630258133208,-0.7867005931377542,-0.2929792885327347,-0.11792370777983543,0.09673841700420698,-0.927198491950049,0.24928283952958852,0.7317632227864428,1.96447913816252,1.4119165941770606,1.985851025000837,2.174092834985765,3.210841305164435,3.4660289653259637,3.27106787367709,3.0406751705753092,2.8415822103133865,3.128967974912906,2.1925954871953266,0.7294488656917648,0.55112328363946,0.39483514188928037,-0.5884218445000701,-0.6071549318092501,-0.2120828705768199,-0.0059102234135824105,-0.6727864957976093,-0.93923219589424,0.43023890173159196,0.37229560667368616,0.5612098322678523,0.03537406688578226,0.6869841373595501,1.0378742593635684,0.01416856113756082,0.5007442339897039,0.2917123026726508,0.6909192059385747,0.9373589544588038,0.7911544749993951,1.0150524705388175,0.15131062814032348,-0.02257400051431971,0.32388679633713185,1.0458539433725647,-0.48619205258124154,-0.4401049848608259,-0.8271410293717325,-0.9286202996048938,-1.3003127995945647,-0.782683507918976,0.011524598025464017,1.0933313061662904,1.3088613378506548,0.7469240378717277,-0.6905257371355437,-0.3116321768511413,0.7955228439781759,1.582275497677566,0.9860797616756714,-0.02639737436368872,0.18984533024954972,0.25683856777877445,0.5726668776383202,0.0174942137042558,0.2165256871764955:1
0.5524431596800625,0.6539385449114624,-0.3159992637973387,0.04390321009982473,-1.6589304095695145,0.14857086742918843,2.390301952143309,0.4916889213385544,0.7405553156125325,0.8696163290869654,0.6267001717026089,-1.6258691037071886,1.2521792723253249,-1.4513527693244515,1.1822843346389145,1.0441587150704106,0.11513935484686426,0.882431432769453,2.2682998357683357,0.6250914608568595,-1.301373003141703,-0.8641813569506596,-1.0761566643220433,0.45227865657789934,-0.39308639228727094,-0.834926563881027,1.330486140930348,1.1382584735725538,-0.5050773041716824,0.560425481388952,-0.863806396901495,1.4965095002844486,-0.4597372606282139,-0.35587466754522706,-0.443854298903158,0.20970039740459495,-1.150652899672578,2.0017991351985596,-0.9054812929957138,-0.8651449860142598,0.8095783273412759,-0.6073269448399033,-0.6146080355381857,-0.058449056893212836,-0.6880699403058445,1.3359848202499656,0.24749405175143024,0.27993053769994863,-0.15742353086738703,1.0820908814134185,1.6005280316389756,0.13593137016803303,0.03769552960749504,1.0673603195359913,1.7599561583236958,-0.0025409288695785685,0.4520711571900397,-0.224902628301207,-0.3554839550499224,-0.670340755686162,-0.8589630095680251,0.8638532302534736,-0.02092962634636154,-0.6062452054886598,-0.06738240315311206,0.10923814186939702,-1.398555264865144,-1.4117154195222665,0.6364222642135497,1.748801497613561,1.4777286707299038,-0.7996342478303436,0.0017230484545426002,-0.3136509397404076,-0.3942053577042416,-1.4034047049287202,-1.181762969766654,0.5943626546058335,1.0230618551422106,0.8738231034648642,0.8292876262268168,-1.3308541301489483,0.24082430334376978,-1.2372889468470831,-1.056784280268577,-0.5751704095225784,0.6243404466709005,0.37852379036368244,-0.31350862777193655,0.06675749626276783,-1.184878065151643,-0.014148411771272325,-1.7374492550851792,0.29826259158275165,0.5012079921662501,1.3640940648595865,2.5528886199920873,0.631837653683838,-0.9803890965018976,-0.10680057809331535,-0.22730466751864317,1.5604008174713415,0.04685932199966842,-1.557423064222786,-1.5034060510696108,-1.2746423142022079,-0.5373063516971763,-0.29230023309023273,-0.40971264360980253,-0.269928582524065,-0.3404518162414058,0.3056207111966901,-0.03049704795215172,0.8852018856547027,-1.4325619578142312,-0.83445273850515,1.1315289153861166,1.341850061362761,0.7625302157841739,0.005565213719107307,-0.20278003413645973,-0.020399966901718372,-2.1411892859967674,-1.2647562434148358,1.7730299027429357,0.08129547112922478,0.24727040912527842,0.5597385067613572:0
-1.1835412304478192,-0.3601964770151408,-0.04588603779070985,0.8358010948356411,-0.1493623392138127,0.33570797203283825,0.24377776684530278,2.2087217188793065,1.218078701972118,0.75825175821409,1.2060909579731232,1.1795839623056796,1.0415994976237601,-0.18937746266562994,0.22993880909901573,-0.11865397815524362,1.4339669896650151,0.8905911303589865,-0.37063061660509733,-0.7826572437147501,-1.8127794277099514,-1.408500451910481,-1.2498428081999118,-1.3513966698789472,-0.40455547898882316,-1.8959946879690064,-1.870632241641765,-1.4135483387346108,-1.4717782820572114,-0.44449562454238534,-0.04150691157336839,-0.024695658197473543,-0.8478236829509924,-0.4639754077942517,-0.7009069815085407,0.023614763444332,0.2009297619966246,-0.1666585918644841,-0.609202666393164,-0.47570398645956397,-0.6331125090137486,-1.429364867749488,-0.46884449374752946,-0.4175271004209657,1.0665089617143815,0.6210821257411967,0.491112370618913,0.18181319868268497,-0.1520460278704203,0.1809620570694642,0.4095076119241886,1.7092081112073967,2.0051116430315568,1.7203382762165127,1.7037414890956546,1.0199930276900477,-0.8223699486338841,-2.21367802055837,-2.5708463001991744,-2.3082580111331716,-1.5323368431100661,-1.5036468961391065,-1.043563476590698,-2.0894894387616754,-1.4574690593846067,-1.8843681777805363,-0.17446344205470887,0.5909294072387666,0.6680066678812626,1.8481866619377043,2.1730905262204296,1.4137415076708528,0.7605571146342975,1.3180381957384253,0.3150806635550174,0.22784864886580308,0.793113656720997,0.6364222523974771,0.9331951012710354,0.5541833651025321,0.8224993919813736,0.02744588037100182,0.09307571697249027,0.26004713879488917,0.05190386241048936,-0.7673098447076284,-0.5758118085568441,-1.278783347141296,-1.3015651393107177,-1.5189188104376001,-1.4348163278801074,-0.9281327261309031,-0.7685735555862345,0.29741403895590335,0.39857148543424054,0.6536104641880802,0.6231237647481931,1.5927823057880235,1.367916018063247,-0.6377723698023352,-1.257808062148671,-0.32408417327695027,0.32279693662168313,0.16413839307766834,-0.4738336690352747,-0.7566690084259887,-0.13485471660405818,-0.4656708226798497,-1.2458876755984976,-0.5120473307082742,-0.8765802300940808,-0.8443626806836245,-0.10036681716978069,0.5845735416615798,0.9683933291750799,0.4940216330109827,0.9828264188691287,1.5649915088939694,1.215038887602654,1.4004782009086514,1.3931274748022635,1.2188326104267009,0.2769276700895529,-0.9326951090646087,-0.5183185234809555,-1.5446349100705046,-0.9737724099450255,-1.4996216480333597:1
-0.26814104251068976,0.9007275073807004,-0.07331488115827127,0.6590756497690424,-1.1816761911600928,0.115150000476013,-1.8459337487735648,-0.1082247477063015,0.7688887517451576,0.3557704810865267,0.1431998917771908,0.6044611834026231,-1.6026139835128068,0.2697021797849262,-0.9923641127899155,1.1721117810758852,1.2513974691995688,-1.3481223954201156,-0.6557406415186771,1.1268049161627136,1.062594874963459,0.7515519506475383,-2.1218928318645287,-0.34962182221722105,0.1538970800410887,1.7735692076648717,-0.6606576759627906,0.16695994944317186,-0.2940244479613423,-1.2002362250059457,-1.0324837175956305,-0.6259734163952777,-0.6175486444575804,-0.11494682373922284,-0.26668817198851746,-1.4733249982688703,-0.822588634022481,0.4844927869850563,-0.4886295272929267,-0.09346465735127435,-0.23122429904708916,0.090479298529858,0.7259696734659852,-1.0749280993707004,1.9988607799719187,-1.9378677240758726,-1.6385390831768203,-1.5159395070868442,-1.141313122194813,1.1506183510474555,-0.935016701918266,2.1637736982355427,2.443067101666974,-1.2442185593605861,-0.0976108266974223,-0.6116204098097169,0.09371460480104901,-1.1074654267036423,0.9463067419384323,0.20398038929262896,-0.8259135774258233,-0.5543173071609717,-1.0411145445845138,1.7986802381576126,-0.8171906310439115,0.2648502475754626,-0.40191549422244954,-0.3200000298563526,0.8530213985656486,-1.5794216010164852,-1.2486495497827488,1.1195275648119234,-0.042399761218140035,-0.8339925061181559,-0.9747342168551347,-1.2535360256038153,1.5098148885639109,0.2719032819290509,0.41081015279475347,-1.4945605627165182,-1.5119235840050456,-1.383088858084884,0.24657013439810582,0.2486389332237599,0.41748308583971516,-1.3408378877071303,-0.8518155164027883,0.6815106583206307,-0.9507878229296907,0.5589387511073806,3.3789997149895084,0.10536402611386474,-1.5276922398769597,0.25265427922822964,-0.3203162553611847,-0.29472490881731034,-1.5664462800593055,0.2824473540412589,0.6401560548698734,2.36121205833927,0.20327167625650497,-0.08556311261479888,-0.454037915469755,-0.4830100305162729,0.9928320453185573,-0.9169743297834604,-0.0764487176586834,-0.49097344817465766,1.1433195744372184,0.24915109193547225,-0.5707683097133169,0.6064124412783578,2.9743775496719516,0.30968325711112504,0.21421745380968632,1.4764945623843058,1.851850330246531,0.14730929112125754,0.08222715901469729,-0.3289525933256777,0.7719589582747485,-2.708108312971897,-0.052730751273303886,-0.19844052702821013,0.46397594371492346,-1.3976001528348998,1.4523717241291467,0.17123092991422767:0
1.075090914864375,-0.25443020468684985,-0.5194946431169691,-0.1728990285005074,0.199361201854503,0.9785188735934787,0.6411675401409752,2.7624800662871047,1.701487216145323,1.423173114524328,2.5659957591733553,1.627663546249856,1.0788302820025284,1.042840159195415,1.4104665438804864,1.6537267197451484,1.2563937592822771,0.2707214309992936,0.9240920590286373,0.6237706030336582,-0.75473778847912,0.06543331378768857,-0.319684726910578,-0.4011826455355638,-0.8279385407288793,-0.21579791514334506,0.1554505815836768,-0.14764379583897475,0.050008674100210024,-0.7214242133055446,-0.7420549737989128,-1.0463581270624291,-0.9637971802865315,-0.8710847126405897,-1.2678436773546,-0.6135877597057997,-0.9684356266914138,-0.3435952931966676,0.008416587631065897,0.1562185685932871,0.6976426760994265,-0.4707671128565828,-0.07741987063613354,0.1054487084412753,-1.36741205132352,-0.10564602867969142,-0.8318953123378119,-1.1066840609110435,-1.759296638433349,-1.041649487141702,-0.10622041560455908,0.12312910147554715,0.7560678245781491,1.05061645206116,1.3866135250604872,0.21162045329582935,-1.0039549770088383,-1.7022662407081768,-1.5560396142636526,-1.8689150497217353,-1.8461304737885338,-1.5804449310601438,-1.5744231921289529,-1.9587816133288998,-1.6318493083764476,-1.2078459811622453,-1.6473677634075914,-1.6864333549990662,-2.945523037383037,-3.2872727261792205,-1.9786089319134303,-1.3154944419522414,-0.0034991475957419915,-0.28691405984361,-1.1502768581279847,-0.9884198509706579,-0.16683456135723873,-0.22213454094817908,-0.9481223507276185,0.9610252137601244,0.21175891068414487,0.4641420095030344,-0.3582324548371922,-1.1601568192411535,-0.9484214405456503,-1.7422383796714664,-1.6567342622732348,-1.2658752659688646,-0.4528299073986465,-1.733888782123525,-1.011608796144932,-1.3882818755945925,-0.9110166298171731,-0.1378403288943565,0.5202533438157428,0.6324231481218543,0.5597193476595848,0.0497451683073899,-0.5957936666662793,-0.6218722090777749,0.0994791333649539,-0.27039947216624616,-0.606493822919553,-1.278611425309864,-0.4863294183503474,-0.04975674390742385,0.7438311807760246,0.7192091728381151,0.023846143996488545,0.43364433913592115,0.06861974049154379,0.6481955968604256,-0.04994876060704345,-1.3644392858683316,-1.0987034614367144,-0.20908292318893984,-0.04526371524507951,-1.1282544723608345,-0.5240428281785812,-0.10786189546236352,0.4165847949371807,-1.0910849269880436,-0.0815605334869326,-0.11624454759753375,1.0671079173083164,1.7841504049063086,1.0538730199246424,0.8444319552044673:1
-1.7148921558983168,1.648598506350736,0.7412686628903872,0.6212227019760178,1.94196272594429,0.5988444557513342,2.3621931126321596,-0.5796900849408281,0.13167788178831727,1.1651828675812193,-0.4311240503800577,-1.5426948828674822,-1.345807885600242,0.06994251778256617,-0.3397562700970837,0.23876434789404735,-1.3856736144812591,-0.09438550414011873,-0.8641529451797856,1.3557215748143316,-0.060541434785521035,-2.179951354883983,-0.05118353745937444,-0.6744336617640906,0.07009290591668552,-1.1035678087477294,-0.3737454367929226,-0.4904585526919119,-1.8698354328236917,0.7369931365827705,0.3973671238500036,1.2096021651266307,0.4676826898819544,-0.6312867188242662,-2.1414736803024623,1.626253445776398,0.21374091686524024,-1.0787092086798915,0.7979750608289772,1.1751834978997853,1.2739081865443247,-0.43834558695848996,-1.3521531611761004,1.485747331969464,0.06394787969736603,1.6465833951092756,-1.0994742605173193,0.6217944795095003,1.0009100031682914,-0.9279569423609231,-0.22874269126321564,2.1592894717461117,0.36055400367737395,0.28709893513482837,1.0922502431605106,-0.4021281767260675,1.527951755753478,-0.3903313144687514,-1.1284873753991191,-0.889990936521503,0.0693696743451833,1.0422147121491065,0.9529614834206201,-0.11452279691207598,0.4716230827121822,2.4260424087528336,0.6618435579703715,0.4986346388747365,0.8173391189409926,-1.9985039326191552,1.3936326378495019,0.26291727996087044,-1.4371208916707414,1.103692556495087,-0.6770460105035078,0.3420875443030471,-0.029406304162212953,-0.1339705438022262,-0.17661814841769377,0.18197550725492978,2.7070903330177605,-0.009439352964301949,-0.052167290833436276,1.3752309342340308,0.8429383220904867,0.7476975083512652,0.9541246022761738,0.2809431352995318,0.4004578775483236,-1.437646592006515,1.7826247898406349,-0.7536809239350547,-0.683069819306035,-0.924178914009724,0.4099523195855624,0.988707472681076,0.03103847770248169,1.537261099223838,0.005033689889056287,-1.6753679434539739,0.3792120358050557,-0.6599036961558599,2.030944111765586,0.8661128290967085,1.5483727934065623,0.4655475595650289,-0.09043124011930036,-1.8774133500170915,-0.634906398623095,1.1774724304169712,0.1773027157671448,0.5524646417516179,-0.7188605518565042,-0.439439269728066,-0.8707235373771535,1.7730604211548644,0.4238513158244037,0.43013180742366014,-0.7702836780199545,-0.2953996515960365,0.8380086537202744,-1.8211568264462796,0.1510650815481881,0.9808644817432711,0.7276678172143196,0.5058641581107804,0.9132373578335065,-0.312931787142384:0
-0.6010698782401728,-0.5040792362043515,-0.33919336389052157,-0.3855443320091623,-1.687114931150436,-1.4936065514489456,-1.6089948645213936,-0.7691219814813964,-1.2589631097940615,-1.3703473059088118,-1.3601067791973012,-2.264571787607848,-2.083835182578536,-2.355446235427391,-1.4189584453294715,-1.8318795641218477,-1.0260029207658419,-1.135262871375702,-0.6475662333690728,-0.5019854004653809,0.8558064527768645,1.0641876803165904,1.2693553210437365,-0.1650697040075444,0.0010617395761528536,-0.1501177135055416,-0.8160690860652182,0.1183662080271709,-0.00801361502615379,-0.0015059539472333273,-0.14324972856389045,0.6256087910340684,1.4693478771417645,0.6585642398116957,0.6593142826337406,-0.14330185723415967,-0.625568278464947,-1.0852843693352292,-1.750354261220228,-1.3259959582791008,-0.6125254044384514,-1.0024260437601005,-1.5433247965771537,-1.1202448124857318,-0.1186146967140812,0.8279672004820142,0.39296888410174635,-0.49863876675407287,-0.6169695318125089,0.6073540809987761,0.4136638346250279,0.8455821725195027,0.4672197001308912,0.5626952746350767,0.5180988645010913,0.1428985478133596,0.651212188418423,0.5133766743412826,0.7065034585840311,1.191369989063626,2.1297744317225336,1.6928711470124669,1.1669157236128593,1.2033206842519177,2.0476776988095065,1.859396242204155,1.5012589087773396,1.7754351295455524,0.37878285382502375,-1.1577729185556909,-0.6671226789101133,-1.1486851780594947,-0.9646326119106413,0.35242263703420584,0.9295394789582914,1.6483236935828107,1.12508036478708,0.7314510545892611,0.7504554429701125,0.7334034517160886,0.30540672942183833,0.08853822849134987,-0.4936010959091944,-1.2972800341138786,-0.8693100351040274,-0.6607484678658873,-1.1816760247321736,-1.679401624978798,-1.1036603822458868,-0.6688581833629371,-0.43637279113407995,0.17494911359105908,0.11943323309671879,-0.2271427204651023,0.20991609120652643,-0.21345581027661234,-0.721169176837594,0.17800745205272206,0.11887520264497844,0.3333856912582797,0.9103023239459758,1.0068949749825948,-0.05517165879106911,-0.29792072838847133,-0.7478684294426058,-2.067231742187306,-1.8502341849668982,-1.7801089284641822,-1.5427354640012698,-1.497711302270857,-2.1055395687320964,-1.3322161156317758,-2.069214519383535,-1.7541281253373067,-0.3587035294817502,-0.7344165785485448,-1.2629516287935538,-1.1202742935389831,-1.302429597937523,-2.2024855739138407,-1.7025525868254818,-2.791970868325242,-2.077472147106481,-1.9008575581780125,-1.4702216785196054,-1.470861208463139,-1.7636642679845176,-2.4940598289528495:1
0.14745580506417746,0.3860607936299667,0.289271698203468,1.4917717613399817,-1.1670967799853207,0.3373272856135789,0.9177462863413777,0.3942574147544022,0.6659159880143337,0.8162333350387342,-0.0035507784141214356,0.7201731783533816,-0.4001497981038918,-0.7635614444379546,0.18545869628880068,-1.7847021550456204,-0.6637646330036315,-0.8307579870343837,-0.6884127830388441,0.3660221769145101,1.9612288198688328,-1.404934376516246,0.19948124514018833,-0.3579255159180382,0.7368932153911926,-1.8198652204509052,0.8493053778750371,-2.4769253431375002,-0.3748879598469475,-0.7767241704036992,-1.7553010697787812,-0.08211347229218943,1.6239615458004333,-1.3331534941573397,1.4565922869584096,0.31225037635264463,-1.4681375655160869,0.09835321372736162,0.8590742944711554,0.5689862932264313,1.0178547018616728,0.24881412301965714,1.4175562846217014,0.3219073233259673,-0.4794851612122737,-1.4023016378636752,0.26316886079148855,-0.1359463734842574,2.1522721252072325,-0.839817359047451,1.103826280723468,0.7762954676633119,-0.3596708516506356,-0.8186216453053853,0.4953083569365694,0.48331465494108566,-0.28309817436648216,0.3487421778090723,-0.8345861640136988,0.7669252149591091,-0.23644260059300698,0.9731969890216601,0.896147198433201,-0.19006860945121207,-0.5720021420574123,-0.8455001732314927,-0.0643941219219771,0.658438430806396,-0.7182575827205439,1.1247859207177364,0.06148549603337291,0.11438724990173468,0.10782104012278582,0.5040354096864098,1.337077671548967,1.191435232129967,1.5228196150062752,-0.9540631139142393,-1.3434769456982851,1.7141477067664186,0.3491934263921681,-1.056759239839732,-1.0356758922640046,0.6045503588229307,0.16127390193214888,3.1031711897515297,0.9796641518045699,0.00594274658970402,1.3218955793249614,0.6981046660109238,-0.0244783013154371,-0.6682998564949894,-0.5224767738894703,-0.2725899500527408,2.251354182162131,-0.7767156570722521,2.024046732922431,-0.9480681378433814,1.2429806634093705,0.06813538626858144,-0.5484254001077334,0.743995056054196,-0.6943235184428127,-0.5451157782270948,0.2567644957481456,-0.003995374438715384,0.7657647097424561,-1.3565041959617903,-0.13447952565066773,0.09143119635904162,0.5903133877419738,1.425485774841895,-1.3352467362043103,-0.03313595092027953,0.5590822625339552,-1.3113589499430964,-0.9340316150694652,-0.7442940328141587,-0.8647074163913702,-0.6329949115914948,-0.7845830300716733,0.6312171362821773,0.953310619125646,1.0574954000060632,-0.29520028353925437,-0.8182691288643315,0.37944677838925384,0.6013725350924487:0
-0.4492503046537639,-1.4405319818506421,-1.6924712596866107,-1.7408226382099876,-0.39213325970575297,-0.09155401133356325,-0.19228572944500746,-0.6629086041807248,-0.5946669803705835,-0.5146636599643184,-0.21412104106626206,0.8437736068256457,0.7018356116070886,-0.07174848308245196,0.6798706742646144,0.19035906162008198,-0.3926745622356732,-0.21635503273848078,-0.9984792310783017,-0.7106539448843808,-1.4247264119625613,-2.142782365769521,-1.80034045715393,-1.8247226575720987,-2.0512926514211403,-1.5371284612878422,-1.9836519462788882,-2.940621324926753,-2.0602391030700136,-1.6312755450614276,-1.5965669597185326,-1.5996962280565912,-1.788010006182544,-0.06115795381484368,-1.1067487280957014,-1.3475062106662135,-1.0832758006350995,-0.9775129431256655,-1.3437793990826536,-1.4781090655026228,-1.5892263922728642,-0.7741377998839123,-0.658292471689155,-0.40788162650773774,-1.5253038780744157,-1.949079440953791,-0.5872648556588017,-0.47592857699142993,0.023382150371976218,0.37404335228616326,0.9162252944562921,0.18619611947248038,-0.4491823537516554,0.4471353352308156,0.5062830271227247,-0.3712583966807366,-0.9709368874267164,-1.0061774035432027,0.0947723021690039,-0.3870609751757199,0.3579086765244337,0.24746212649034,0.3892963422683853,0.041445591825472694,-0.18320240251362274,-0.012407789930029722,-0.04066220317135547,0.41380976357901217,0.4861422196224411,1.1624369076002743,0.19579737319364154,-0.738425744689283,-0.6646618662330427,-1.6790258132232556,-1.259658724730435,-0.29018853819585844,-0.37954320936649855,0.29411331508825156,-0.043429111928919545,-1.1719086432364265,-0.23760933072198132,-0.7711226753765932,-0.36540013592868154,-0.4961761252496285,-0.29982159293453076,-0.9895471389027243,-1.239362192450689,-1.9365632794196146,-2.1157500951033557,-2.485973842456714,-1.5526962710943248,-1.9734722195622243,-1.7020416021355036,-0.750915433505511,-1.3652946853061056,-1.3057658896129505,-2.097716177658289,-1.0530062926358028,-0.5834955373723825,-0.5076809759441003,-0.18021803041169296,0.39689854209527586,-0.35275184299712126,-0.9222698642039757,-0.8559510111957134,0.3204338797007341,1.0171708033963929,1.6533621151135298,-0.05802182574692294,0.15436907891299484,0.15991427992503587,0.15742465172269257,0.45959462851331234,-0.29624272148278996,-1.0395218320878032,-1.1939800061511971,-0.11202915647591138,-0.2820436325288792,-1.0504936718525208,-0.5686743075309586,-0.7159270676927945,-0.310037044563977,-0.24424287572375075,-0.16513845607266836,-0.5619474365831644,-0.7862516203506497,-0.5073916855419407,-0.9440333373798111:1
-0.7552199099421,2.1980679120007043,-0.32577666416174894,-1.3892482693256953,1.290293470001007,0.5941319300383178,1.2386127384671501,0.7863699451902103,-0.3967333024523744,0.3408586810058947,0.8748385705233827,-0.5972021203540501,0.5062607375625103,2.4642150454113994,0.048379616589441975,-2.188037371202059,0.6767974051208129,1.009491205653124,0.8894258049081013,0.9340324540640682,-1.9000132911450607,1.0881891406651456,0.38652243728654123,0.3120701489770212,0.5835335141975861,-0.2784579010644221,0.24042587796987527,0.6524201131445332,0.0998919067025451,-2.139225475424832,2.9479743491420556,-0.16613618391620075,0.4577436827946999,1.539010461077624,1.4541778054773014,-2.4951065298461463,-0.46840551013933984,-1.6511093466867528,-0.2788733724286117,-1.109660147111805,-0.7115083084067524,0.41798522154919077,-1.7227164898008718,-0.737449692431715,1.4416808506465906,-2.148743121292381,1.5978747639380027,-1.600589074287552,0.8497338281482462,-0.1832456216082558,0.19942888720203802,1.333434837845929,-0.895370244283738,-0.012597419425468414,1.0013906090987181,-0.49486133224328893,0.8356052264825545,0.5586328312800994,0.9869197963119115,0.9346569124861278,1.1896368903043832,-1.223086865644472,0.11614566425004809,0.37268400986270694,0.141155836568456,0.022837136562023814,-0.7125778105083233,0.4423074660584571,-0.9339294549297935,1.3363488510707295,0.18952662763077466,0.4170621649413781,0.4459892904291418,1.2567618535083869,0.06911844337153646,1.0182696224420424,-0.7376154466421665,-0.16106390606728244,1.434908719017201,0.5751019136510226,1.065035600674844,0.32974956019563734,-0.8723673478614058,0.13996422522450114,-1.293104082586542,-0.6854876634931903,0.9396857861363758,0.06071860608511762,-1.7418237428245658,-0.8683941664093788,-1.6146760223882024,0.10399698977488309,0.6867399181503334,0.03174152112220189,-0.08019899860058144,0.5186440210477817,-0.44176776476698104,0.5675381435346399,-0.07462089463528199,0.9066627805211297,0.01294125269326189,-1.0230775682270676,0.29134310742491654,0.8483397253101123,-0.11779956502136125,-0.3351020379420678,-0.040944639627792614,0.08783047778710089,0.3512120815503799,0.16580521078499647,0.7328455476988254,-0.77387184101741,-2.271532470663938,-0.7106465748587233,0.7804577324650875,0.05200528312770898,0.3335377431722805,-0.8481005027207756,-1.1161224821328843,0.8872256019508851,-0.07761525579858759,-0.9280591886560854,1.0675174050853136,1.0979145423425356,1.631126864707477,1.90683800342332,0.4898459391337666,0.5665018974090322:0
-1.6806068770652267,-1.169635107633646,-0.3584596890511489,-0.2255580575568903,-1.4860722857351587,-1.7863228911204851,-1.0823666298794903,0.09093938986947292,-0.7687667728453897,-0.7250228664160171,-0.2609325034626696,0.0013596113051599912,-1.0322495496226731,-0.8818137165793061,-1.0115748366731114,-0.5919997019616732,-1.365444004133375,-1.8645872893036897,-1.8639476656677254,-1.095899397015736,-0.3011440674158692,0.6766959855523156,-0.31829574372763547,-0.6522594516839296,-1.598368367440056,-2.3046509263370085,-2.3494648925699138,-1.3536543405528938,-0.7529265615304035,-0.39397194700014204,-0.5371093468925792,-0.6645453196349473,-1.2061957387933888,-1.0775155081886318,-1.050775819822921,-0.34426151987373516,-1.3946222956709202,-0.8403320837407473,-0.5791527337551878,-1.3564816124080097,-0.5943301588894798,-0.13604133354053005,0.394603959343892,-0.6333426691526308,-1.4003164295801498,-0.9334300172465675,-1.1761749221697522,-1.0859545317569959,-1.4241102844969755,-0.9578117227801505,-0.721069572274994,-0.1981205666299964,1.4582037132943182,1.3570254383673885,1.9750474340553428,1.2051778044179078,0.03271446124034305,-0.5695632763532225,-1.2780340357338862,-1.5821697546052302,-1.1839610193869847,-0.4866743339301196,-0.5277466559495583,-1.4608009616548332,-1.1018569316086493,-1.018976862306981,-0.7148100434071517,0.26288495564706216,0.04832071078547098,0.022651826682822406,-0.8874210344291721,-0.9494228275744592,0.1995328042109985,-0.49157212080264145,0.527193947186027,0.7344467760094637,0.5669387497639553,0.5637862643584998,0.39814785698529387,-0.8276064417409925,-0.3545783466342629,-0.5147069055803195,-1.4561563621375586,-1.815498861406728,-1.5788493803823465,-1.1441114748558237,-1.3227109834600936,-1.4111209772510072,-0.9431575639421573,-0.4195020636321928,-0.8951620054783905,-1.371983546040258,-1.6242342293663508,-1.624065193139137,-1.3232297024366448,-1.5794787123433482,-1.49748226792852,-0.8602482052954694,-0.911153204838703,-1.0694644157429087,-0.9195725675664763,-0.5230096637804894,-1.4961435917893766,-1.249670088431323,-1.2115049031524843,-1.3424346908122635,-0.871857852089944,-0.31057358892285714,-0.31751941467728473,-0.7293636579378611,-0.11374071920097956,0.8113354041326806,1.1058946771465896,1.101430806809945,1.3046357622309448,0.9414931693593096,0.9803481239426483,0.9953824859235239,0.4373259257203826,-0.7460125699268447,-0.4947593085821598,-1.0004421810113315,0.1021811229611298,-0.1061304141238147,-0.17587336319409902,-0.9577950018504298,-0.40769841938830453,-0.02571077588117876:1
-0.25439376368139577,0.9142234184103499,-0.5778675448120867,1.453411457160034,0.3599304897356356,-1.0369838500501172,-0.20709839798081037,0.07932938357878754,-2.2574745203993407,1.4108636609780756,-0.26021912539424735,-0.6525064342536213,-1.1933224563199931,0.8239058267779981,1.1716679367905067,-0.7517385330209484,-0.3880908632946924,-0.5359921013360809,0.4934510236911752,0.1111777559382659,0.0254433846847793,0.8847261072630332,-0.7177931185376193,0.5177910481747917,0.9483965973802847,-0.5862435667650796,0.29963145749200776,-0.6748547996812291,1.0455923736280592,0.3052451070601019,0.8647562725901144,0.7438024628186963,-0.5677816822859119,0.29485525454893735,-0.43458055606061835,-0.12466443572256325,-1.2742771178627799,0.3683136485584382,-0.7492524988700755,1.1688933291094628,0.9821130480489867,-0.3846106420532834,-0.27265805703298585,1.7796201481476537,-0.19085895594474866,0.17784922908795506,-0.519004862068155,0.032090951209263245,-1.0112564669500632,0.6894836510868676,0.6509579597531368,0.8398905909104085,-0.2880065395756948,-1.28325158261357,0.3048416878160602,0.06476184098144978,0.25420856485921944,-0.28729309185804486,0.11190531559193785,0.9937102942388037,-1.5318763180366533,0.03194185850831808,-0.15555345750421332,-0.4467616302728867,-0.9614855588898257,1.209185023185059,-0.42613142546742044,-1.0535024849105359,0.47964696029478293,-3.669657681625819,-0.7206077230693346,0.4198547083214457,-0.9949333641284163,-0.8088819925559294,0.5664214176950906,0.8113602537996271,2.517765717812008,-0.10391106192762493,0.2337411998862216,0.8527896682213393,-2.346635185410673,-1.1986403848994844,0.04000207041666135,-0.5892820556845072,-0.24285853969621177,-2.318862732995467,0.08668590234036376,-1.6596547823418286,-1.5031198401234613,0.5838888829433013,0.2602344009468202,1.054689498098832,0.25250705248423544,0.3484848659765255,-1.140784685193058,0.8500587258353355,-0.48774280392362845,-2.305583434320075,1.2905434591331668,-0.6597694994525056,0.2876904479046731,0.6627405042059271,-1.076507660927835,-0.38393837010353327,-1.6515731520905728,0.5743952305290083,0.09042981101339867,-0.5062596820312729,0.401682229461454,-0.23585036934994177,2.496203057896488,-0.6990527509171688,-0.21261071422098785,1.0324801066428082,0.30827611232137186,-0.6697232723809827,1.2883691912373867,0.9246718647463744,-1.1552653797164274,0.2628070859610413,-0.441384571841758,0.48466395545227653,0.021061128090579678,0.49155755402226575,-0.37490132010028115,-0.30240540623549356,0.8989708989875924,-1.357575823571804:0
0.3162642188156899,1.1770351279136386,1.026647092702873,1.6805980582399709,1.3916282166623763,1.6229689384115762,1.5757703856397134,0.951051371898902,0.842913537472366,0.7928672527736463,0.9017255267022541,0.7476886267777536,0.08837209357444775,-0.887829341810781,-0.2552724983100736,-0.9037870338799091,-0.5034043982815017,-0.9823995594652539,-0.9421460283086412,-0.7869056046362564,-1.7536973031787886,-1.4275468709774493,-1.5000139387148734,-1.2622287082895576,-1.38919570511741,-1.0700741628169497,0.5736032394043649,0.48426039352616523,0.2659607205442341,-0.49337189034463524,-0.17132796103881462,-0.623282795568906,-0.8463711630572877,-0.7589792423486101,-0.2213937487789634,-0.8312625578677357,-0.883000546016474,-1.0826374460311845,-0.44349482140957475,0.27746405853539147,0.4446039316597589,0.3904984788497591,-0.036208957207702896,0.22059992843782508,-0.738803481337519,-0.43294787102920795,1.154612272677257,1.9177955742256898,1.385535554251594,1.7325827392642625,2.641096012719784,1.8526119710285496,0.7432310544390727,-0.08594943217500228,0.7595652246477029,0.547865203936229,0.45006823013275377,-0.08613072548111389,-1.1317730324726112,-0.394107533543104,-0.45399411550153707,-0.399306961811896,-0.7250533774645292,0.7061991745835801,0.7811249782407808,1.1737913079383984,0.3375868587486892,-0.3600658293164686,-0.0096373088837296,0.9193333690143758,1.1570325286804686,0.6427883937609447,0.6109779800834292,0.459817185576589,0.66731389505663,0.0015628144008722478,-0.2873103741427983,0.05929763264115839,-0.8012376002093935,-1.459732790964627,-0.35915745385611664,0.1253543973426472,0.024726183399216006,-0.12387234753930751,0.30041889354346907,-0.019235612884552555,0.8833344437541114,1.2028900079336173,0.9677919818955859,1.1719626902094722,1.0977317217685019,-0.7315241792892141,-0.3761391238387302,-0.07368616498816893,1.2676441070056617,0.7787615970245273,1.3936683637644607,1.7011644713432554,0.4079510051225925,-0.4786351382896528,-0.08432222232224179,0.6123691071724552,0.1953531871162772,0.8097253695144352,0.6764474131673683,0.9861416933599398,1.0096303329647875,0.880129133147701,0.5173400054787016,1.1320508120960184,0.8276532946928864,0.4796264432321867,0.0416143691534524,-0.28419144917144407,0.3315937747527793,0.4934238889127851,0.3862216619129628,0.257815465656584,0.23675077140557008,0.09794410277005293,-0.3286644339195518,-0.31631521287605585,-0.54255752421136,-0.16367294650185155,0.4165742786913915,0.8365829332920167,0.3318297083361559,-0.49286446747080676:1
