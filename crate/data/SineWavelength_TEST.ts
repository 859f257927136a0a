@problemName SineWavelength
@univariate true
@classLabel true 0 1
@data
-0.7218585838146004,-0.5074986494962777,0.06346894666409827,0.8687620092993467,1.2398698702215722,0.5819344629429001,0.11932909508903469,-0.44595958312042727,-0.8495721326068806,-0.7206690682759734,0.5172553879987715,0.6924714045005101,0.11589523836066906,0.11593439288211199,-0.824278918710255,-0.47130956592601836,-0.5763878580694785,-0.9615700053751369,1.1295248155746656,0.5131398655131363,1.6722513256529874,1.081859987806169,0.4070579446550778,-1.0699544572038762,-0.6399650249164505,-0.44081153019474484,0.4842675716597573,1.6081381447741134,1.0835358711111183,0.5369762717382114,-0.11247373071543541,-0.4862006868939528,-1.3985984886794982,-0.10991950211311613,0.3422950449996981,1.1679469996218064,1.823312815482293,0.0982231503258495,-0.1824571889525982,-0.5380279356177946,-1.8750406877989343,-0.48082281104557156,0.3734152505656029,1.5329225226735352,1.0466532320962574,0.6703854657874877,-0.033281375747696296,-0.5650641782178931,-1.417991802778865,-0.14681264476729927,0.21489295403196917,0.9998528811638129,0.6539407361933631,0.9522699612417712,-0.02277005919069014,-1.5275566916951824,-1.4682942104488301,-0.518868784151987,-0.06646595349325524,0.78528116403782,0.3099852134173563,0.6905188867630296,-0.4949086196760022,-1.0022942464499707,-1.0799571284897111,-0.7561279114873788,0.0387791663809616,1.4986677115259015,0.5205222710431203,1.1982914437560643,-0.13693945333618424,-0.9660066308663514,-0.812076568092683,-1.5520984248758896,0.35643862100676,0.8535997174968419,1.153569135394628,0.9235279137231255,-0.5706258424662369,-1.4268076771058038,-0.7613949594167757,-1.2791219411701422,0.609127461671285,1.43997541222926,1.3294500116279013,0.5584600407477139,-1.0016687739203933,-1.250999197914277,-1.0737217756974606,-0.08781797084283521,0.42253538635348686,0.3066861391633756,1.0976698560766283,1.0021727524590136,-0.00042005895020269524,-0.6725821644438958,-0.5327690099299615,-1.0789307521470892,1.1599638688725364,0.3439788515974527,1.0172647772774033,0.4099292902533895,0.08807764911414276,-1.0191092027026647,-0.6810687226489835,-0.9509826903304973,-0.3645247048589951,1.0098642819768628,0.8425231788590771,0.7663117483787943,-0.5013140831144055,-0.9872248486219667,-1.6195761669345625,-1.6902137223693412,-0.156312001215179,0.7488885994313687,1.1347932072457405,0.43543816021300635,-0.27431129837197943,-0.8270350028776214,-1.1645430952626505,0.16961078385984607,0.10033764584679168,0.4638193690870531,0.8610761998072464,-0.13617264183091993,0.1514183178767875,-0.5355678398367572:0
-1.2515130427267214,-0.2384716952051431,0.46791294462842276,0.4468190897828214,0.6502833668946524,1.2790124157750462,0.9435032237206,0.5317246850718108,0.7937954150480238,0.12687436228454652,-0.7648786142703914,-0.9764374944753698,0.1209578599696507,-1.0065443218084764,-0.8981946217055161,-1.2902209847313673,-0.39475550322312253,-0.2965710275102377,-0.0689961529238079,0.6070202263880093,0.9935316329099299,0.6549674654990068,0.9036695611458813,0.9565985863015254,0.4846358623304609,0.7799851461937948,0.5490302275241046,-0.46817363489331276,-1.093196054479722,-0.6560773481512352,-0.4100541597894518,-0.6122678293285582,-1.2393187442965585,-0.799786435450479,0.03476440603991837,0.565208242952437,0.7162557860856803,0.28090683560372065,0.9878874794217166,1.0305456226966272,1.0866658101744997,0.9485907683218295,0.17294530850704978,0.0509426122100729,-0.08502486836096168,-1.4453626555596357,-1.0644249008393676,-1.3487973284691328,-0.7914629900944503,-0.09116165155389389,-0.09726596845093578,1.4378717147231965,0.6785509183659492,0.6737294937869864,1.1432002135719828,1.0088323353218176,0.2877680851563575,0.18616838740960118,-0.36648881213520745,-0.7043059975910899,-0.7391496427630958,-0.3150494087377461,-0.7936879397112302,-1.1110422868732872,-0.8280963754207951,-0.030122784185613594,-0.1377337270023301,0.566513730252971,1.4599071006188007,1.4698952311294922,1.7081892364093556,1.0480027933272238,-0.20808776984021793,0.5076674378787202,-0.5364514740729062,-0.2937699741670599,-0.47147919883678,-1.2978932442109268,-0.9971710645895508,-0.5139104836616293,-1.04400444080981,-0.25083321277968423,-0.1069769266924596,-0.3665145334956347,0.79313356982684,1.073628887994164,1.321879640117124,0.8682800770569754,1.0031164103842503,1.0374533790042404,0.30088176355800733,-0.46447246826131117,-1.0080382428390056,-0.4958277923727723,-0.4104989553878239,-0.7069941448093737,0.3336637505466721,-0.4655333100180819,0.354205845785967,0.012390267303836966,0.34945968225137003,0.8252419813335798,0.9429151372741563,1.1706589389488253,0.6806245636899844,-0.2812783253662495,0.7962000070890529,-0.06291849035706482,-0.6161491548337464,-0.8029597558060182,-1.261338585136973,-0.7693538307697306,-0.9954030573914389,-0.9148728177676725,-0.3807076767656137,0.19998470276540764,0.5840523281543517,0.7829401571940459,1.7004025967012988,1.8040443917303042,0.3958769639062038,0.24939000710489934,0.47970334675248455,0.6429905041757806,-0.14146631186811642,-1.329550222929169,-1.2543405893863293,-1.2311146719133712:1
-1.2171043441272107,-0.9413700297734884,-0.9316565106163915,0.06278951227303717,1.0756868500722636,1.3519618372345066,0.9087653376456726,0.18145347988007893,-0.3820483188923193,-1.1471215350383577,-1.0724899914933714,0.4306497079556444,0.8480724592144375,0.8620048362437753,0.5951426563178772,-0.5916115181582353,-0.7235151649358131,-1.6941144298399347,-0.5314177473450398,0.4141040971992263,1.1846641440976295,0.9613224492245289,1.128553086056026,-0.1902843277277089,-1.1335789893427664,-0.8867300604426992,-0.0006628386402309783,-0.06815781879304333,0.10110077984301924,0.774274260801871,0.31155303811303053,0.2250385620389478,-1.1345849919562265,-0.9084085130142208,-0.28583678534795415,0.35945282922462135,0.8451863813234888,1.481983174566013,0.8425524809718493,0.07110087335330154,-1.422245331829158,-1.1540914656136503,-1.4125450851863735,0.37125155618302186,1.1949167166922883,1.010993244776803,0.2132777897212188,-0.09200597781398803,-0.9771971213160113,-1.2331249155052415,-0.3216461530837015,0.5301228046880804,1.611150039099706,-0.03461259480133205,-0.3271110675532085,-0.017017340760879046,-0.6539825797746359,-0.5272709490282691,-0.6793943503004146,-0.21190417831662625,0.6347877902290654,1.0027917786791183,0.47985203364583884,0.08180687367069842,-0.8181864477831279,-1.2158361684553576,-0.8333172727835605,0.3678832964903689,1.2532821835560126,1.1424447210965882,-0.09215591990843819,0.08067200712330613,-0.6148364660240018,-1.803855375542948,-0.40095530492256914,0.40456254808470077,0.5993076015002795,1.0962184855670016,1.465031489613744,0.3792979754633561,-1.1270391100699828,-1.278440984974867,-0.49842067682570057,0.3325750242965636,0.8317019148769702,1.530185721151291,0.4757221972565506,0.0010206810528231858,-1.2164607283424735,-1.2681521728089824,-1.1257174977287052,-0.942721321354237,0.8294555841301221,1.165045896106137,0.4633839603007949,-0.7845564937483611,-0.8801251866547017,-1.1567621677076776,-0.4009660756470788,0.2849324003848425,1.8697958417375538,1.0391999454386027,0.8282201457727958,0.2898972330514058,-0.15298783481966205,-1.1052384976383187,-0.8721192995528451,0.4528943831573027,0.44997345216218787,1.2388157497502488,0.8552586837554181,0.0986918226982709,-0.9946810969735086,-1.164175167588326,0.22435988753629266,0.4743971444149073,0.72937031347044,0.5128077835538447,-0.0821586648710465,0.1282586877563014,-1.0546446765598012,-0.842415191079741,-0.9936176456707755,0.4997933394167749,0.49214028650809033,0.9631548180362273,0.6443268432475352,-0.49810199194543114:0
-0.17594286106345997,-0.5358058723168857,0.01208759296658346,-0.8772741841270155,-0.8406276620794884,-1.1029606088268122,-1.361533811269787,-1.2585280980660671,0.097102696103531,-0.08440194852950342,0.5028571692790891,1.2785325806737138,2.1288199359364417,1.2487289395652348,1.2272968717670043,1.0852712930237276,0.787893301085931,-0.8014652895156141,-0.44868095991226026,-0.9533938992006935,-1.5044961701280029,-1.2176695220888851,-0.8637309833261717,-0.7366829691537642,-0.4809925943450307,0.04536348893436065,0.33027134538860864,0.16911200998413023,0.7199071965032455,1.3385964737217375,0.6041755451030827,0.6960780214078266,-0.022416655940926067,0.12531356093141482,-0.418022810577708,-0.9919946375675571,-0.6788569846675374,-0.48091628147850696,-1.3450410578241074,-0.6695480607111246,-0.0324395725983192,1.0355505803850231,0.2133547039097093,1.4571065439672537,1.2979914241827961,1.4914213674279988,0.9314656297789696,0.21340523055279725,-0.08645401388929264,0.2745088811505967,-0.03321584162254859,-1.0006630315036082,-0.49793891467173806,-0.16160255869052942,-0.5075572824393892,-1.120416393396686,0.10019286643015468,0.17657355723265641,0.3494853805246336,0.3314224104564466,1.0910740953555957,0.8949498582778782,0.6156747344390094,0.6576955339777839,1.316837402924947,-0.4754970047408515,-0.53413336375029,-0.670194090834183,-0.3933793065894797,-1.4616755126703465,-0.49616177274347906,-0.5187963491142062,0.11181082366363343,0.8631895993504455,0.29141626733690296,0.6711092693752247,0.9545412957870015,0.7344579958851782,0.9312056507919879,0.46632634731926437,0.4527589558333155,-0.6100747676169428,-0.6490853686735918,-0.726047740655382,-0.3146636311842945,-0.8743169012524888,-0.6480913843687306,-0.9113027732634841,-0.11351838500319406,-0.4840736025633867,0.02144526050807255,0.5129404148237393,1.4143305411997484,1.1860311535263686,1.2341578671401443,1.5614436559047702,0.20820591171185893,-0.873176301225841,0.16598855694347436,-0.5629970368869048,-0.05471273705313773,0.012625421666544012,-1.1143545222281706,-1.5766841029221768,-0.01869464280421468,0.8692414074954888,0.6784908553302712,0.5222741321135135,0.8744073005933354,1.4459798482838069,0.9310618027997456,0.3206410520021266,-0.036847012260082024,0.25029474220955583,-0.2720442158111924,-0.41170108613606554,-0.5902364404253363,-0.8028169584502765,-0.16807256894016498,-0.8042504874969956,-0.6564031420957648,0.12899516767769165,0.4681980811319589,0.7892624858627089,1.0891335652433614,1.0480115118121036,0.6107146514014503,0.1249247941351238:1
-0.3027925812170412,0.3233873404519304,0.16743384564466324,1.5753993610801122,0.8096620198078633,-0.273287064247542,-0.7831777761430403,-0.6370894308649362,-0.7534465690598067,0.16570147572073868,0.23736714101731632,0.45625922053051216,1.6146065641835072,-0.35668945064807445,-0.5684014141022748,-0.43778959439835063,-0.9573670548505591,0.5061637755278608,0.3983747487889435,0.887950305113659,0.8843048274150921,-0.6515370366135907,-0.40882629205849497,-0.35711400174719643,-1.3322991133934938,-0.5727570361734828,0.20645947130754028,1.322081629083229,1.0035868045417737,0.249731888622354,-0.9134071836668184,-0.9858596646490685,-1.2451504816718741,-0.22311103685299077,0.7121039233635573,-0.12123392191282611,0.6841878879306111,-0.08537259962923355,-0.781196736871164,-1.1916061868890957,-0.9486308786066733,0.5379184926297997,0.5036662941021388,1.4443979622503627,0.13590132515094022,0.41390168836332886,-0.6117689254890857,-0.8176964540410053,-0.5592310435571519,-0.05768763168370915,0.1486741769361693,1.053074919918775,0.3813355966449026,-0.14308753232310328,-0.7366129885888635,-1.09077489008828,-0.48832888974727345,-0.25105357411367224,0.6573187544104167,0.9039365521030577,-0.3640915142636001,0.9049642598094592,-0.22049726682881993,-0.9730696826567058,0.0014695512385179965,-0.2956585937910532,0.3843642302441034,1.0545245229054483,1.288183406405824,-0.11977237521706333,-0.41991222709785964,-0.9426524251244202,-0.6169434718637378,-0.0853251858262887,1.3535008585702526,0.7222510199994518,0.5880201533139882,0.12096070345369511,-0.12958517336120562,-1.0606989215172318,-0.38470073477999445,-0.3101731775808057,0.3380101428543522,1.2009379661829809,0.7723432721881326,-0.44454093625110913,-0.5849421729811227,-0.6428008350578134,-0.44647262230854745,-0.3208577270958958,0.6011818165690709,1.287298161883793,0.4713738959676004,-0.2016188282996782,-0.4415886661492495,-1.333230672714964,-0.5839081361278126,0.3913183880941692,1.2978081740825205,0.9822403618741509,0.43046865475691465,0.49637147193966913,0.04269258302719725,-0.8959902278797841,-0.7773425005006628,-1.1960755820365156,0.6875867539629903,0.7487082664930986,0.4517673674723425,0.36161975088592624,-0.9831584032813868,-1.1189177859046153,-1.2407175898618286,0.2467293571475931,0.24677402472159726,0.5856784270805366,0.20156007648666163,0.290449031634484,-0.008704545331124858,-1.399321436461386,-0.28815857761869623,-0.36255030647252406,1.1166277610748834,1.169372181666088,0.6272627439488427,-0.35750361481360393,-0.8676503667568425,-0.6504053910772956:0
0.7768758240273036,1.1942393329804457,1.0928612358298242,0.3831064013003552,-0.6398261485274743,-0.8641021907834504,-0.7740828531888637,-1.4981654407295415,-0.5602556150992823,-0.8461573743177055,-0.3769520493209396,-0.7917746740330529,-0.5339263680015993,0.34850729119180796,0.7700107043465021,1.1988556542033253,0.6428585499221536,1.4539883305748635,1.0732786182874594,0.3062383147052087,-0.3753344912254176,-1.3899270934835373,-0.33616171488102603,-1.093312032112804,-0.5753603561373799,-1.5094072301494044,0.030598684118017805,-0.5671710058593726,0.6029696985359345,0.38084980616279535,0.19512363991172288,1.785000035859463,1.2734114532154217,0.6608537385023994,0.8772027347235671,0.3405450734029228,-0.7734418082119865,-0.7403230069131029,-0.49051922030135886,-0.8309679489918105,-1.3094308888844801,-0.6542026593069423,-0.30708723139197414,-0.6671044858880517,0.14868513754254842,0.5733920568897276,0.22296746360215203,0.913076767068898,1.6174359203890267,0.677233401674022,0.7726524022605206,-0.09144171775182958,-0.5358080220786725,-0.565847767685668,-0.33132477349781947,-0.6186612834098614,-1.0397282187539634,-0.42442882352333894,0.255205258664713,0.10763644053878313,-0.316967639284194,0.31623793775870224,1.24194531628546,0.7306346778640557,1.0080232727095642,0.701577606634496,1.2797260592948616,0.6602037956130491,-0.5305348081306307,-0.29272895903527607,-0.8062164317470772,-0.8143523278522302,-0.7805142513069498,-1.316869432534586,-1.5242925692239875,0.07579297748330344,-0.021517847772293125,-0.11356473404449868,-0.41518562916268165,0.9000112850643307,1.217443988306715,1.7333797729900866,1.3478260152066202,-0.10560977349111639,-0.061258579181059855,-0.4381411365857193,-0.5228885358351671,-0.7574398870142692,-0.9331095491560201,-0.9989948239170953,-0.9997660312508813,-0.489442253997152,-0.6093268790066949,0.869270201687485,0.43686616775386045,1.0999167834266879,0.7072670010135229,1.4043047879220842,0.5477784106606131,-0.35547026877537585,-0.15131418330443563,-0.5879846681279457,-0.6270448144073253,-1.3486976136240634,-0.9655416445065649,-0.7136687284396842,-0.6626880537340638,-0.042357974259272846,0.049728080058377006,0.3331117686047184,1.198871586928819,0.5714045606865511,0.06062337996935585,0.4135595479572992,1.12178132893079,0.16224449790839623,-0.405832141222913,-0.6891346995318143,-0.06696706177360512,-1.0140781094511677,-0.8964186505519663,-1.026539232551023,-0.9523274506894608,-0.9770392585900439,0.16010663451556997,1.167117964055436,1.2236984887083153,0.12307091248430135:1
-0.04537732993852406,-0.13922714861862856,0.4195225557629505,1.2675320933198029,0.28858018314698114,-0.4699977695103817,-0.970154900310154,-0.9992631795050237,0.09755641685806599,0.44288241873636713,0.6781887120102268,0.8774507176214943,0.514593309974968,-0.6345581386475109,-1.3376207210768578,-1.3008884046969496,-0.24903055516360015,0.4157343948363678,0.8748470633121983,1.811387324561616,-0.47836487608539957,-0.14011744371353596,-1.1934157672081709,-1.5594428345730553,-0.3128339035125716,0.3246094495672913,1.5984912608176893,0.859479395044016,0.26826356998234807,-0.48678531172643535,-1.0698341468851726,-0.7299273762838271,-0.4876296893282144,0.8372277075160703,0.7323566893265299,0.6168208726381097,-0.10279551794145075,-0.1737571951264294,-0.8649721497834479,-0.45023703203835075,0.2697893402013931,0.8988629217048623,0.7851608897311149,0.49783505056387584,0.5439123390391899,-0.14835611767488838,-0.9299567000581382,-0.8312807656018478,0.01547956107813353,1.0993286207608735,1.2610173454043652,1.2798487473504387,1.0405335207787294,-0.8007651432216552,-0.5735408095872414,-1.2597963923549624,-0.618047871861668,0.7042712765221774,1.1711382408842115,1.2967251529862625,0.7308218480334645,-0.6065517959883617,-1.0799497120170922,-1.0906913872157338,-0.3578431437512325,-0.10534789780455711,1.9831571830077415,0.8311327476234767,0.41039421705067824,-1.1379564620494955,-0.8881199866855178,-0.8648333095337822,-0.42375933009381767,0.4871190261592584,1.299190587042514,0.9659721651098805,0.3347759591573227,0.03959595205753352,-1.140869366957873,-1.3144380262108606,0.3063532157330507,0.2620033650205905,0.9050095833273802,0.9249829208343704,-0.42727031612928523,-0.17001519999571424,-1.1962034479324593,-1.0041234955582559,-1.2425049545309585,0.4294405815028336,0.37841352389617056,1.2834769479162798,0.5234569964807698,-0.4462467662071639,-0.9641395533620735,-0.21059773570936313,-0.03806904916121745,1.091038847357214,1.2657620871916486,0.3681027866349562,0.9007861834240904,-0.9480649204883982,-0.7987925806342807,-1.6299152468740852,0.3127449617677803,0.3172623152081509,1.4342474826579932,-0.14050566678686327,0.24211851252707273,-0.15984989720253484,-0.9722754902420414,-0.7187362337350933,-0.2214445370799516,0.25000512366953354,0.3287558636215757,0.8472061053151665,-0.3138512736162881,-0.313099785108938,-1.0794756678646351,-0.3994868341164739,0.27831021990934746,0.2088275920390413,0.8198992016404378,0.30973632448180966,-0.129362147890628,-0.418310150323562,-1.0112709313235495,-0.7738745888550355:0
0.8173197607439215,0.336163148306158,0.3266817274641495,1.0246238494600648,1.42367782540566,0.32125000839120627,-0.1968073312261093,0.062104934056685296,-0.16953087528055866,-1.118439315018412,-0.3586710040674985,-1.088885108656069,-1.1448543476719593,-0.6571156361480184,-0.5462441990754477,-0.6546195068094147,0.8961700148795111,0.5563770451325556,0.6852453790657369,1.397870983198422,0.6239045706582265,1.0004243697343138,0.6626951790328192,0.2275879546917553,-0.05377817434175414,-0.9675239255303442,-0.7387546987808943,-0.363172317816267,-1.1073757744277914,-1.2837404460194954,-0.07158902743184029,0.33562207594275556,0.3824748205633745,0.9472306557863055,0.8592323522665458,1.4739628847394877,1.014158640251367,0.9283646224454773,0.5532999990554437,-0.20395272663503178,-0.1697223336177195,-1.3505462580953922,-0.8470727304269206,-0.918067243033629,-0.3341570941163269,-1.1756591753371173,-0.062371623577297725,-0.4897476035830569,0.8243916597986785,0.88409296932338,1.0032690493812677,1.2704364073790164,0.412225502273706,1.3953786977927307,0.327034102191387,-0.7911528086664716,-0.12177144171133064,-0.663625691631611,-0.9831822801419389,-0.5611939169367183,-1.1598893424016326,-0.7238559116554576,-0.8552005939677568,-0.2813540398541411,0.15965732581721792,0.6136788321614329,1.1147152797316542,1.3424905865556334,1.2599899543103048,-0.19497538674237225,0.10031645566632819,-0.4775125058715053,-0.008752985912184319,-0.5467439747930362,0.18596888034517634,-1.0929073950318158,-0.6484867169786476,-1.134119789011529,-0.5482552564787849,0.35574061383639577,0.8100946665263402,0.8378272469627297,1.2804860458209548,0.5944409563352857,1.4548546781609317,0.32479900346568363,0.018566232028962237,-0.5907151248852776,-1.0533227101058356,-0.10493762662748096,-0.6903324220678186,-1.1397457692178474,-0.9224816198311964,-0.361752657171512,-0.55693373066212,0.5154749250080093,1.2020037890780844,0.8645785448323144,1.0859269751685494,0.9935764670692285,1.1489397714343903,0.7076318386295049,-0.11158626893609688,0.7586930689788289,-0.28848790561999527,-0.615127322299065,-0.651838060014093,-1.0565519518431847,-1.4177983726091044,-0.5701121760768348,0.5567911647008446,-0.2834313821401041,0.9172466078038624,0.23724164194371988,1.45573120215286,0.48086904933093266,0.5420579877159564,0.35237585835310936,0.050085421688931736,-0.25408113244587965,-1.5252234588098252,-0.7325058664019191,-0.5003808723312373,-1.6405288422996822,-0.07640836992710931,-0.2307136440977135,0.2411297635905664,-0.5494297849247153:1
-0.1522501656444335,-1.1779023449165082,-0.61320770141605,-0.24439892023014992,1.2563913088577647,1.2467238652692019,0.9746943212434083,0.43520350098545435,-0.2827186068368577,-0.725056730887405,-0.5762812807017785,-0.38957943952033736,1.2169026231678983,1.7811998098864503,0.8610502074313982,0.17145856508492183,-1.1870077013605962,-0.9897419617261405,-0.547525974271648,-0.6531807343003084,0.8899031378232168,1.6345509166307801,0.33794300273877426,0.5316412645016424,-0.8766603063800953,-0.4870631464367676,-0.11135900566761359,0.09707944748998976,1.297326857498865,1.3481674861402895,-0.2359996469895136,0.05524471253546788,-1.1291795237534983,-0.6670830770357408,-1.1932105450643733,0.22749158529731536,0.5894591621657481,0.6146155222605882,1.0855744427774816,-0.3922079115081862,-0.05113990988203654,-0.9038169190495794,-0.9959718742798149,-0.7907275312184218,1.1385452277905792,0.6581310939629155,0.5932149871599027,0.07725989379553579,-0.8332328372259306,-0.7199690101843181,-0.03439523298950353,-0.19632963007938056,0.06605815080344168,0.7039624182681743,0.14975818147142905,-0.13638293963277118,-0.29479235255783354,-1.5860494849664977,-0.8966181012605596,0.481234847721606,0.08887196009130793,-0.021365698957023227,0.6800760941794438,-0.1291436809887548,-0.6736462031108872,-0.1946378192738355,-0.8678641582227297,0.11550553180269708,-0.09070515546764091,0.8545808784101477,0.6456312473591628,-1.0103743297389218,-0.512336015426016,-1.1396468945617007,-1.4573584973318472,-0.5164266021493161,0.26548364429849886,0.37501277423998614,0.7519998994385618,0.1511033664643289,-0.8609688829616404,-1.303172471218959,-0.5082988152784577,-0.10890526012291013,0.4922360352305054,1.3493835926344164,1.094216370994508,0.03348265125543884,-1.004151404334359,-1.3006690461796522,-1.1759120013572981,-0.6223881294859377,0.7866542694749026,0.7002599834024423,1.0843998721522514,-0.36296096523929805,-0.03130346829942077,-1.3767418625935939,0.14551441641520368,-0.005614692349717572,0.8964166351332896,1.2616833064968758,0.3329823904515989,-0.3887982108184203,-0.5405976708095627,-1.1924588517079528,-1.232831297282073,-0.22153469940275763,1.1010817511926192,0.6182452250775821,-0.0018530395025013746,-0.8362827867119049,-0.33058591307566854,-0.8647284271812913,-0.32364879971842314,0.5558579251607326,0.641131145362007,1.411879499177234,0.8240743623658764,-1.0539424284789642,-0.5817614587220608,-0.8324897933456881,-0.10250017153606084,0.5282430775950675,0.6037533717299708,0.5513533055923234,1.1526055321886384,0.17384284112195184:0
-1.5139456198348271,0.2514498812913263,-0.7667817993653753,0.9950527524830972,1.2881311756950673,1.9907314216738414,0.4270998842179454,1.2485232528383219,0.546250802641362,0.6971504199087444,-0.25720323013952284,-0.6428814578419048,-1.113033084078146,-0.49217064729797816,-0.5686462245186812,-1.6609370768341238,-0.26416244843543346,-0.5445353430643237,-0.14423189375368978,-0.3798431732986961,1.0602415849936244,0.807432119234448,0.48175201655915334,0.5798269850968758,0.09857408212040164,0.7791646793484639,-0.3536905885841992,0.5138277117986839,-1.3262658379196257,-1.5588591744656395,-1.1988914855503907,-0.22802142498888212,-0.25304846046032264,0.30675624291435893,0.22289040662996856,-0.4148520509037834,1.2771721761442083,1.1745170373984146,1.1180818608081031,0.9268923970220909,0.09994208654750442,-0.1289226087906963,-0.3547617768723914,-0.6696816608417148,-0.9398493537273773,-1.3466658722621612,-0.628706886628724,-0.9053277994413691,0.508788534015044,0.6260585943826065,0.01057007912124508,-0.2068457308677485,1.112716429647529,0.6228889362145251,1.1740946953129305,0.6623759704237446,0.6139744990406942,0.27532757042734424,-1.172243353085342,-0.006922851464361113,-1.386750309217065,-0.35762221741165423,-1.5915237930268487,-0.7032524856545864,-0.7972179912376941,-0.9921685717019905,0.11640911109819503,0.33583607735951726,1.5378026880210953,1.7892112505281546,1.1944836476703453,0.7752500751174399,1.401329220557058,0.10494100935294937,0.23665122023884358,-0.4152825271255043,-0.19565312614799135,-0.049219769818191206,-1.3031992307019349,-1.8547269352408224,-0.3009218375568479,-0.11211070218334938,0.4072004250949418,0.19692380983703145,0.3547406563518443,1.855949927872437,1.4774723848088556,0.7340594544242718,-0.0710667071148473,-0.3547307524954647,-0.06075417624369278,-0.9773267115847489,-1.5622992416359442,-0.8443982502632192,-1.1592908434762044,-1.1448592526408274,-0.665021888163714,-0.6555463614675854,0.06022284361015309,0.3531804141714141,1.0362803895595185,0.4820603529160041,0.433562827133961,0.7072016820185032,0.5428201960140062,0.8771115755718366,0.8055831907881611,-0.6233478757404725,-1.1510680775882731,-0.4710109375692163,-1.0189345607288212,-1.1714668204558656,-1.1234061261088337,-0.054665524450444036,0.1632491698617834,0.5118993145917928,0.7675034064601197,0.865075902671072,0.6394841562355709,1.1436173031760322,0.36774108387140814,0.09276105833122202,-0.32589543829909706,-0.5827697939914265,-1.3202732049301833,-0.6733683626335525,-0.3886881586201568,-1.8167161280488204:1
0.41146859075925535,0.48855797292279657,0.2575359591421057,1.3949279490749222,0.45724963184556616,-0.1607565850402853,-1.261791123104613,-1.4105820933337647,0.23101643957924767,-0.08952053335527876,0.1480203811807267,0.8183902191459828,0.0920120123076319,-0.42560878740978275,-0.6700715067612236,-0.7899265600223737,0.15607864166034835,0.8184771483509881,0.45571692071312586,0.87975765301401,0.8411270492697094,0.08944083182497597,-1.0989179294414841,-1.3010459414530087,-1.2854966954154636,-0.28327484546916476,0.8048146952234478,0.49414626270240936,0.8832964462959461,-0.05569464076655406,-0.9438725756105134,-0.6439191958735843,-0.14496586419803875,0.14434384466856093,1.1783771155949592,0.1309741307540161,0.4890937198006998,-0.9802238281003718,-1.1534024257389337,-1.3909788616374619,-0.12258347362303262,0.9281145681741065,1.371231575304518,1.1395470951125435,0.5939972598233316,-0.6485316920203916,-1.2386762884651517,-1.4004889311244697,-0.4585059226666607,0.5051472991108412,-0.09602228618521602,1.4124018857209208,0.7185332245246607,-0.0898819421207182,-0.8336008273174232,-1.3061527849469603,-0.65044536662457,0.42949645122753966,1.3674857778245868,1.629439718849198,-0.1767185730839947,0.06584645745953815,-0.664691804859015,-0.7234097316271813,-0.2301633102149629,0.061258582741468504,1.3229241753652077,1.342280190321543,0.5653761713758891,-0.5718781684921218,-0.8989523549152092,-0.8401712916647007,-0.6864693885199165,0.5687140222563719,0.5847347103707629,0.9672495627138757,-0.29733773625119014,-0.6520354994815308,-0.7898826074295291,-1.4926567251176663,-0.1575214922324591,0.3805668735895657,1.6430143673778717,0.9004798094609713,0.5572196552671744,-0.08034617383083109,-0.7089017517700427,-0.4670817212084702,-0.16988754211495302,0.263124763457673,0.3732576543813234,0.9849708290107017,0.6695055907956169,0.08030950590865688,-0.9902346564954636,-1.307481806663847,-0.7057712420730322,0.6077905210218902,0.6560317905302872,1.103533921157217,0.7667124967570103,-0.4295125949481818,-1.3740381589679171,-0.5200724576604697,-0.931763087211702,1.1029833185494027,1.0104570028213935,0.7755449954920053,0.18737137557821784,-0.7413509613726175,-0.48158154088524224,-1.094743224599799,-0.9033110115987822,0.46777949971838234,1.1977779113374194,1.1012102082331943,-0.41307152995724095,0.1273168196826529,-1.3904547207892954,-1.7505200413070878,-0.37271180583406377,0.05988287896338951,1.2355356653687082,0.8191595533768449,0.8307606805317717,0.318027637029354,-0.9049321780361745,-0.15390127164087786:0
-0.08311502877640364,-0.49754738493152567,-0.6043646132350596,0.07529660136258676,-0.5170080501649936,0.487513929553497,0.4419487300138696,0.9222862885477358,1.2562232747101005,0.6865092339324413,0.18530184687038265,0.709213981074775,-0.17479890674388845,-0.8323207546387108,-0.9612780628267994,-0.6592993474344939,-0.5234454035598372,-0.99453653318959,-1.046174426191893,-0.6978736298938064,1.0441541529113012,1.7755513766997946,0.5164563055843803,1.135747767835504,1.064790762909823,0.7635311604073519,0.15922964788965407,0.6692088801663162,-0.802525773888055,-0.4130683741771319,-0.47666534511851916,-1.1168812504507382,-0.8259283639615798,-0.4907092052347174,-0.45771768208321173,0.3508801966310279,0.7871633277050667,0.3557554905239346,1.1068720704958546,0.8048811491114202,0.15746319273375142,0.9119714393571285,0.8727406846171204,-0.5123822287225497,-0.26486307210005977,-0.45310684803360013,-1.1382609468658158,-1.0561118138563925,-0.45202312696157476,-0.3675838166218638,0.12475990437757783,-0.2879011116827578,0.2830773394731412,1.1010443734971478,1.2370814533804766,0.3667735240612312,0.530277996919134,0.6553731465706101,0.6882653316493038,-0.0024983696111628567,-0.26071999110133004,-0.8609428347536761,-1.327743752819646,-0.6894910094285225,-0.6459603345358069,-0.6173517216684936,-0.6177063102855948,1.0112259524360716,-0.6153270147014909,0.656520673413803,1.4413540161056835,0.5068307823355063,1.000790746091393,1.5333435635025197,0.49366970402473154,-0.3865422282087379,-0.3698253885807662,0.2492559608631697,-0.7855304161279674,-0.07194915910727462,-0.2930317131116654,-1.0469224964787394,-0.5482669822682189,0.16823034080200522,0.5132017468530133,0.537768857680598,0.38344308544766104,1.2583237920796104,0.6086885547151767,0.5104079907570082,0.8037867330331421,0.6701604205291563,-0.8481465524160756,-0.5023473433191992,-1.1149925986077236,-0.7093249530076282,-0.5967961652413405,-0.7471620866140669,-0.1249973967946666,-0.3022107292461513,-0.20772823140327001,0.36107619333457797,1.5454775480636924,0.7052558114065901,0.5140033920835052,0.31297805872365664,0.3299366345078292,0.1959904207154259,-0.6181788772186064,-1.3813764992596536,-1.024445456279504,-0.9175674937761242,-0.3839854639124084,-1.0671414853073018,-0.8658834483833505,-0.502070254182311,0.6837560943846819,0.9173628125107403,0.40692118285855083,1.2700589862471798,1.2002678497964778,0.9899322504905577,0.14510542581148866,-0.28648814076699547,-0.9639334574684875,-1.114978346193477,-1.0484516034591227,-0.7478040272882844:1
-0.6889254642878142,-0.5647685289974915,-0.07591383199174727,0.6690955100067947,0.976324573796865,0.4769345845445139,0.42752988261765257,0.1301858295858035,-1.2000209788622493,0.10108230876185764,-0.08335927749570002,0.47145251899474117,1.1714156577381398,0.06492345545421063,-0.8154153401218065,-1.0235067237183515,-1.2332914086251512,-0.6820293544610821,0.35806938518206266,0.7618219668697268,0.525390410876486,0.845709467092836,0.5256898781865952,-0.5426413464694106,-0.4293759011672177,-0.39023773320981836,-0.19149135638931403,-0.3247023561250544,0.7548994051931848,0.6686242229099064,0.2160097565458093,-0.8197458743074808,-1.0359380442394526,-0.7074692805677908,0.2802826168192514,0.6483324258222578,1.1559645098670717,0.6646354646976682,0.12140877497217381,-1.2060813263925063,-0.8485787108773939,-1.2620591463987094,-0.11756618563395041,0.42151677198254117,0.7662463724832982,1.4178849531581714,-0.04408627298924761,-0.7809742565384137,-0.5866554305330469,-1.7436655362947948,-0.6788764937370751,-0.004650523956447716,0.9979576125110238,0.9135208667208728,-0.03462126163531396,-0.15837262669848406,-1.199636515680005,-1.404754144244369,0.22733395187770827,0.8012417996959016,1.1224363785975404,1.1759100337303177,-0.5578017567515269,-1.3600983947320096,-0.9147726557943829,-0.8373398954850155,0.5899954304489019,0.9019701854251639,0.7322669482760262,0.5873001137847474,0.09948427748429672,-0.6306241444033063,-0.725248794992965,-1.280430443118076,0.6053311116972511,0.9245791975153494,0.7791992282236528,1.1868357549288335,0.3871665539206708,0.06342443401557618,-1.177382078479347,-0.6155066260131187,-0.33483275489363185,1.0778528327469443,-0.0018299724599083467,0.6824431118592026,-0.014650682316243682,-0.0937185651183211,-1.088159777722398,-1.0409137356934592,-0.06947964640810339,1.329689088983781,1.1947076906912801,1.177032730493444,0.03519812980115803,-0.3118262715719684,-1.3071545999470406,-1.138192103816079,0.25443368309650216,1.3126003212943602,1.0779933440006164,-0.270418405643854,0.3155478064781966,-0.7750625556204052,-1.5356477004404177,-0.733180599579602,0.509973653606942,0.5979675854274105,0.9485760770697238,0.8532899922464223,1.1197933658426882,-0.6546313418584989,-1.4237736770249496,-1.2432355328976152,-0.05868694811637441,1.022677740209037,-0.04530037765872286,0.5049105052360376,-0.08657528464316402,-0.6778120881725993,-1.9511770470787,-0.6253405642313419,-0.47226270504613155,0.32689044818801183,0.2532178955606298,0.6855387184821966,-0.1177408354767446,-1.0730006239103353:0
-1.1261116259574597,-0.7410102748548363,-0.6641543267158863,0.3763299050405387,0.024959706542053706,0.51173298594732,0.7428374954172475,0.7114477706213092,1.1608270335078632,0.42283369878037125,-0.07217600127681967,-0.061093759429109065,-0.7223511992250187,-1.1337117060148203,-0.7002636995907435,-1.1245632655842417,-0.7074581403040855,-0.5716891745571796,-0.4712549842592618,0.14275011704799284,0.3849880566411255,0.781494138050661,0.7377553408780894,1.463725530027334,1.1503562683941047,0.3579694735426686,0.08093761215056719,0.0003617354903116127,-0.8409583397862397,-0.9536839986812693,-1.0666361285936143,-0.9237007753980452,-1.2580268091621143,-0.4885200395061128,-0.22408280688503884,-0.11259347940834813,0.5530638391687682,1.6232058350260345,1.637854563021547,0.9633391630333575,0.8557801979897818,1.0431149196389042,0.4144436640270157,-0.7072574998499669,-0.14521204283436845,-1.0936705133578868,-0.8275865014226269,-0.6046136639664692,-0.808118803788912,-0.2717520573017829,-0.3833153660861267,-0.4508166164948539,0.36647825601926437,0.9668648232027575,1.03056646529158,1.2528119064438288,1.10911064017745,1.2094834582659808,0.5776196946553633,-0.4314878501507239,-1.0969837046645545,-0.05902239638055795,-1.2622572358243855,-1.0432936079784183,-1.0618904748790001,-0.004273716417454887,-0.42796675651564337,-0.32758199467689386,-0.5249134216584366,0.9267341493143294,1.5962161197260059,0.4476341932019644,1.0492494240726695,1.237375370138309,0.10520886072725252,0.39753973883619137,-0.40679912634439525,-1.6537461607873838,-0.923355134548627,-1.0916513283543368,-0.8281766557439763,-0.7645982497122596,-0.6444110701049243,0.42781577536712484,0.8866637168268232,0.6597492923010233,0.4157918798153991,0.8204305663007685,1.0549883797659185,1.2150547444253252,0.40204723976747764,-0.04429433060394197,-0.3448912663998006,-1.371496802663379,-1.2422598198572614,-1.3162887512472403,-1.176553562332752,-1.069912391786414,0.41471056327129774,-0.3139010394479345,0.30380654339620405,0.9775529894422655,0.715492777542909,1.2262199607729936,0.6076173864461766,1.5984930851027963,0.5486416460001237,0.23179075984579217,-0.09088670362526746,-1.1537352068725426,-1.1945306037910715,-0.9984828153334853,-0.47858127094469904,-0.8483697731225253,-0.767302699352156,0.1333544276608508,0.5026987462437578,0.9814354026244918,0.21169719806375098,0.8162050756929499,0.7862599340279643,0.3642036004696258,-0.5751463499477627,-0.03812781669509269,0.25062197025873917,-0.3635547713473062,-0.4080227284004644,-1.533251907631894:1
-1.4787490082883163,-0.21362040402760782,0.14410013744243377,1.1003892308079624,0.8403292658702264,0.04239199575057434,-0.268676184194021,-1.3176388488145216,-1.3097155258867668,-1.143677898611913,0.2111974794167933,1.4707028022219348,0.8048604136182042,0.6523292068392813,-0.2542683406634287,-0.8739852787885644,-0.7836477238762153,-0.023716571804019926,0.8826186721361989,1.023715568399758,0.7604566728320509,-0.03327097967812248,-0.6187313645194095,-1.3095107872819491,-0.8618288610762636,-0.07840555551227738,0.5516711520408373,0.9966528171271953,0.4992813359051619,-0.15820133584722434,0.08876031489662972,-0.4863200642493751,-1.0060594542778207,-0.39762555115334736,1.401792344558336,0.8639860913668415,1.0910964794556008,0.6520300344324845,-0.3065339038086769,-0.781388879701349,-0.909535019483606,-0.5550911707955722,-0.13215940645262003,0.9238581238545834,1.0496698445165642,-0.18601990054566814,-0.9702694683403206,-0.22180811717270554,-0.8639237202341619,-0.40038021670565294,0.55991198013846,0.9927190115290575,1.101937576802027,0.20257719494781012,-0.5689428232345033,-1.099402815989299,-1.132318584558358,-0.060873682714590066,0.5307992250385175,0.24545197518085293,0.5831870939007957,0.3112473476167158,-1.0219029237256434,-1.022193005895837,-0.8004063855046294,-0.7193775148876429,0.5283885556432,0.8486918630226651,0.5353356439854511,0.3994376373179692,-0.5154168946207099,-0.42028016174458604,-0.16318390895891377,-0.0006458791625589821,0.9952163107808822,1.9424857749666744,0.7987051815703582,0.44528054830863295,-0.5603952099688152,-1.135212027482003,-0.6436535121284748,-0.30480657243503734,0.5381350903932727,1.280460074425895,1.3134768505760892,0.11321640229150132,-0.6767924090872212,-1.5041617893310306,-0.7482402627064212,-0.5880819443465516,0.028057479702752575,0.6696623977238743,1.1595539742339094,1.2027914970541662,-0.7200498356725726,-1.6305014482240887,-0.6314594489798162,-0.5777612604299687,0.827490488521212,0.49450831299679,0.4134048697252761,0.16282076042615767,-1.6299457990034392,-1.4404285809637971,-1.090142636852013,-1.1322043342043542,1.5133185293465778,0.8051277013276326,0.8501251226876458,0.012301995173444547,-0.9661315404040163,-0.8002493316618976,-1.142552982649383,-0.2782954390677679,0.2579999811044446,0.5114219424586871,1.219853596365754,0.5868876206497793,-0.9442188922426129,-0.9825908873789672,-0.8962090729712786,-0.5297465359323443,0.5287254702222288,0.9925739095174216,1.1688966110735146,0.028232381498663917,-0.30039110479924724,-0.4642423068191391:0
0.34200397861897613,0.05434035137301829,0.3727935389905104,-1.0081304972381706,-1.0034533214016506,-0.7421635393723757,-0.4216450432528954,-1.4424624983019605,-1.4311807809839194,0.08587522777851925,-0.03959027131213044,0.4476062913375068,0.4970796420402226,1.0595101337129713,0.4302219758868072,1.1345119095717482,0.8384112904382819,0.4532635366766897,-0.31290816900950075,-0.03960050623756661,-0.6217541568451824,0.07138338376206643,-1.3323743012675877,-1.3530528092309042,-0.9252269761790783,-0.20369041497758628,-0.4651793203108166,0.10937522099650912,-0.48266776659152744,1.0679250034533914,1.863701518107147,0.5659553898886232,0.9733414918962751,0.18477766954986494,0.3014107663332623,-0.8974272871298756,-1.1785313665463295,-0.7853967761279214,-0.7144289941739965,-0.8030257679959891,-1.1744680609753115,0.26379415449591287,0.1048895713626786,0.8458169093641515,1.2842709590714136,1.0006246191939376,1.1119528402158798,0.7256952651906439,0.3644253947894138,0.8319175596559418,0.010925317399437182,-0.7955682570685774,-0.23269059404404796,-0.2920914342572749,-1.809646997045709,-1.140909317340245,-0.6885037530364159,0.42343511681192486,-0.17194396828854375,0.04009932614500006,1.4683297452844588,0.25601032018997427,1.1658728867813273,0.9880509656433406,0.6948628652682312,1.7415465157945682,0.4826106919074379,0.22852076556921708,-0.8052566695556365,-1.1939415848456216,-0.5350910448003154,-1.0968749710064671,-0.5960279051506072,-0.6874136354386201,-0.31466545510355715,0.6867439131951422,0.5656993028702413,1.056856230060926,1.2395875043924578,0.5273448502874412,0.1094858231273792,0.6710107552431892,0.15743117216246819,-0.36075873378138074,-1.182066332489736,-0.8079941033411628,-0.6257879490498099,-0.41829712084096193,-0.6882823974188683,-0.7358523776806508,-0.33980582232157486,-0.11234590059434885,1.1154053563346809,0.7651392188011557,0.7786279048264363,1.1942694500898636,0.5811804215157913,0.11519062593948787,0.3031752871545182,0.14128209833501815,-0.7912224174373846,-1.5093984665058005,-0.6872394617651387,-0.8737612733242875,-0.7900400298713882,-0.2844083251057634,0.002031613573012195,-0.22481195219960648,0.48762224875943827,1.463385842258254,1.4305858169041001,1.307183187420906,0.8894185135886363,-0.018445484885198704,-0.8243257611174021,-0.416029022095909,-1.238843644943084,-1.1923703825231602,-1.0550604649306907,-1.039014714035617,-0.23678865864145315,-0.009399840420303618,0.40928501825146124,0.9152572861506992,0.22322252315709806,0.8265005529639196,0.38289185626022926,0.9985857663507433:1
-0.6811405439867404,-1.3424327719753566,-0.1964300200500807,-0.1228506525386408,0.022795423515460267,0.47519370718885756,0.3844128445405989,-0.4302665213043032,-1.1873663754844666,-0.8748852596294922,-0.765876022968823,0.8255291285037494,0.9859231411790667,0.6764643561490702,0.5281536859076703,0.17781519607562074,-0.8578435624860162,-1.1390597695463271,-0.6086542090583826,0.7920911753616877,0.5420237019860777,0.7541535735427599,0.2905635359915053,-0.7175415084461703,-1.094139034614573,-1.0879577180237996,-0.15536764162154199,0.5597441741237037,0.6116345083894148,0.9394799717829894,-0.21628904476239752,-0.5528412033460376,-0.11853391835788984,-0.8431959793955038,-1.0928372258818135,-0.013173332746987398,0.3841222064298666,0.9214479479679871,0.6246392653674063,0.04091687565501312,-0.6604112642488558,-0.2836180503751433,-1.0548459557680208,0.9979895099080316,0.5720315890065293,-0.04737811558602412,0.9276553021054148,0.22130497988263043,-0.19625007041548093,-0.45913246287768733,-0.5226760278470648,-0.07487165798733714,0.5761768827509941,0.8476833633444295,0.9616717132474885,-0.2110808909652082,-1.1555788241552674,-1.2176015023063997,-0.7165962555429136,-0.5741346509486646,1.1362907363504957,1.475863895093291,0.6203978493848528,-0.6387815449730816,-0.9143158813935514,-1.1801486469503188,-0.280672228639635,0.9571686256618195,0.8686241413439199,1.6724730421691367,-0.14326206939159847,-0.8836728737603892,-0.5198302647975895,-0.9699423833977,-1.061381947958424,0.6907175495023296,0.44591423433912586,0.9277155360426232,0.3565431819894595,0.2982394463037414,-0.46314392158773937,-0.9856977273768105,-0.7196492701712061,0.6000948053042221,0.15163045514701334,0.8610792832742941,0.7359832141473068,-0.07283533934158087,-0.8800110287003167,-0.43933379482002666,-1.1774502598587335,-0.15056766593669285,0.9715485965754813,0.4119739862292564,1.0058516605181018,-0.24531111554338886,-0.8338327601220498,-1.0321095978619939,-0.9117527871822871,0.7705783181465986,0.7158406722265114,0.6757013181662987,-0.1861304506229855,-0.05386178336728986,-0.9312562012256596,-0.7145369679268232,-0.44074607064449695,0.8613066995102363,0.7609407347109278,0.7436015587392338,0.6104125059248333,-0.3656661314737795,-0.9458383213472886,-0.43557641298267835,-1.683603324748785,0.583926966539841,0.883368273359104,1.3895009025372407,0.780310091284558,-0.45498258289390436,-0.5401359750297581,-0.5180634761244234,-0.4223679067149748,0.48728032957302536,1.035633902472602,1.0193628783566415,0.7009687159315522,-0.5227653315673867:0
0.7119571362037883,-0.32317635696005204,0.47724309615361565,0.2316487490025127,-0.30503290863986215,-0.9587252198796371,-1.057125933611973,-0.18422621041852716,-1.137390847038855,-0.40853077239959196,-0.25700601627248304,0.3894213662791307,0.5322560505151673,1.2497175069311344,0.9784265785996898,0.9002761011933443,1.2078368530571113,0.592451007403806,-0.18677017239946475,-0.24248488149441408,-0.4456522982038522,-1.2938543007650622,-1.0769030687281187,-1.1133577013595202,-1.2992124126288913,-0.3392423777248684,0.014893591672739265,0.2897118459587937,0.3745349140571704,0.426118645243601,1.3987821486397174,1.519421571922607,0.3255543374861461,0.21764666452513276,-0.3951434550761875,-0.5746156739306503,-0.715487720159924,-0.9729949766509074,-1.4775305776996535,-0.8126392562082952,-0.034947222632397135,-0.924952127435062,0.3114016560804992,0.2624672852828896,1.2020859238622341,0.787211083557619,1.02870237050489,1.690161548734102,1.3486106703669432,0.7228803875782341,-0.37719406151029844,0.0006233726699044206,-1.207661646878563,-1.4034467239314046,-0.7537062214274084,-1.9080465544565093,-1.5773232795105385,-0.7472243158387477,-0.2320424697786454,0.45044698174427356,0.12142624017851444,0.8329911976262309,0.6574157736205861,0.6696444716940761,1.3221236131831788,0.3998091308987672,-0.12392218485942486,-0.5516212155480097,-0.3109742636028387,-0.7231869759436889,-0.8938285247599139,-0.8621834178631248,0.14283971745921809,-0.08815494446508687,-0.2636774790275711,-0.03990136513472875,0.27057995714295857,0.8444815150510745,1.5791314184251557,0.977486519530941,0.5468751238809683,-0.26130086461710206,0.9053855087994972,-0.8475707600582904,-0.5878786944729008,-1.1367947382472898,-0.5431802561581289,-0.41932392460612733,-0.6844214962173989,-0.5825617471482694,-0.21723541114212003,0.21637160972959413,1.917444803080818,-0.14679627937236184,0.561612228711939,0.9476987445360637,0.395102173781253,0.9544121175679833,0.6524812032802959,-0.766993209152958,-0.7828050288573054,-0.5720889202432351,-0.9012176683346876,-0.8994835964117078,-0.18065237291272396,-0.0713363656149959,0.2312454376153351,-0.14345392876323831,0.7323758784366354,1.1995767990635005,0.820477005195418,1.36069926417887,0.6524431956662693,0.19266815489750166,-0.6558483331208661,-0.26657287608084795,-0.7678344909457128,-1.2133275350651451,-0.5947694882530685,-1.0845816816551601,-1.1374424598172117,-0.07526734902980875,0.278647549572476,0.5753033591170013,0.647679986163124,0.9173301212021567,1.5974445047354298,1.0291772630884457:1
1.6406586137509143,0.362805417143228,-0.3579044954296035,-0.3710837309481382,-0.827838848965548,-0.2365243027980801,0.6756539468663517,1.0569982820375559,0.36079021961601443,0.4674679446865532,-0.7842680050635114,-0.8197183836410807,-0.888572665604505,-0.3803523814401799,0.4569429849067676,0.708645545746496,1.295173266004463,0.07018346362621247,0.12695689172281027,-0.6304303503852845,-1.5344860209015354,-0.10111588136672817,0.6149915414947281,1.4681572394238798,0.4975163805527114,0.46917423322275154,-0.11702875521690553,-1.1849744495068442,-0.6047247826404694,-0.5970875612372645,0.278849185768599,1.1185114713551392,1.0878513413613546,0.16664387438185496,-0.8615644464146791,-1.1202487434236847,-0.89057041799843,-0.33791982194261905,0.29043950132643714,1.3045872315385072,0.635105509977595,1.0838087990899887,-0.17796090351999158,-1.0407260907464455,-0.709122781527752,-0.012161856425606854,0.18688369982350422,0.5701041594920224,1.1100131982191561,0.1072305318722821,-1.3208363599719222,-0.8180177513054934,-0.7150498856627334,-0.574541742228218,-0.21339005435405717,0.2096190699930901,1.0654715730776316,-0.1945694901547914,0.05746247540712929,-1.2834820323781706,-0.8822362174305541,-0.5290754338905993,0.6118142543140515,0.48061518586925867,1.4376308105693805,1.0175168024460235,-1.5102785789779907,-0.11204318134103841,-0.3940995499660692,-0.29484503390659605,0.5197576105003128,0.452599483356442,1.1487241065278528,0.38397413025182786,-0.7065215523079695,-0.003161626928913086,-0.9274201970914744,-0.952163792435172,0.16922689749256015,0.6758776803512674,1.2367789596021386,-0.30004529490241466,-0.9940330413501942,-0.8239065876762209,-1.2637128336721786,-0.7812467043231903,0.6052991252708129,0.8437630031433281,0.3513149745686185,0.06309360311731627,-0.2705711954507043,-1.3510126130592304,-0.8980593625323036,-0.1342107332717723,0.7226161646119176,0.6442339884453789,1.0786690134449786,-0.13495350771147652,-0.9583305709955712,-1.100065552183153,-1.7620686385995503,-0.4805607494994333,0.5623811031735229,0.2864712529462684,1.1755242721897738,1.1899515849578424,0.03783018880594824,-1.2765797215582482,-0.9124924740552554,-1.0272412556274253,0.5293211724629725,0.5908258978946201,1.2555878355850827,-0.40574224759581384,-0.8597538211414217,-1.1424139199431218,-0.12906527279372892,-0.3717869502404144,0.8870414230487245,0.7313749100777758,1.5436200346779296,-0.14428665783602634,0.18248596898121333,-0.9531007469011323,-0.5242782663524665,-0.16512485521835504,0.30757157692371573,0.45083650752713805:0
-0.5246730527816832,-0.4756536438423289,0.3047296142157285,0.5899092666815705,1.0155614634427899,0.1913643197277648,1.0697280025386289,0.8886991047798043,0.1650017034389456,-0.5247997799606972,0.24713829409402832,-0.8626597448489709,-1.2380664925185807,-1.255108484119484,-1.411865591508178,-0.5104696128417845,-0.31322786970080907,0.6776507955602902,0.8614150183488546,0.7311463702077377,0.4640028012731201,0.9772258317176611,0.6999736833313849,1.056321399795076,0.890415795081279,0.1537339611466664,0.16014449135760533,-0.6552347790850013,-0.7794128833299487,-0.9460998321064558,-0.884981499879383,-0.9961910173416235,0.40465081564138294,-0.757496893283999,0.5478380761528565,0.3742684968049693,0.7134475732506503,1.0131888119115111,1.1340806255170413,0.8668642294899402,0.4753972686665684,0.6354028925893733,-0.2637989654212013,-0.4213362557969579,-1.1264921323622117,-0.22812364007430008,-0.32160449027594296,-1.7177283772612553,-1.053386208523316,0.48884642622156566,0.8795676014812484,-0.1366561377134169,0.7762518848840364,1.1450024916674426,0.0017774741624867474,0.32124762210577973,0.3672274605498728,0.14435274286079647,-0.8963602345513555,-1.30008469232334,-0.5771233798567676,-1.0128744411302406,-1.2505370688475426,-0.7864212723638079,-0.4655786097449922,-0.08292580959405964,-0.14142050528419076,0.5402218374065164,1.3026448339261072,0.45549121149769856,1.5923592856494062,0.8582835984070574,0.7866180640418992,-0.15542543291389924,-0.7330305846061147,-0.3968366240780549,-0.9380346769382724,-1.0566034261470383,-0.2839917208881272,-0.6320469565855551,-0.12283262237223269,-0.23121555498288804,0.4840440243985191,0.37206207543528125,0.7202660628107117,0.7476683632849457,1.1343572455734319,0.6716121729951222,0.6708941060767257,0.07409874066699468,-1.039842062787694,-0.9368394323886151,-0.5049251693981673,-1.0418749550735298,-0.7774811186876924,-0.47188513938167004,-0.36464775104488334,0.4378943495979256,0.15124526491689683,0.3794847582506435,0.4090446074361958,1.0863948479294319,1.0300965808946705,1.1818111591737415,0.6793724052458646,-0.26140903720767306,-0.1914142261967193,-0.5184481263376565,-0.5372782484167388,-1.0382171292199323,-0.5170142888810061,-0.6472635522121246,0.02090280766510999,0.2570489340198875,0.9333222328117764,0.6902732150507581,0.7889172057112598,0.6096111765161817,0.27237446028155854,0.5097668004823831,-0.1594299954528029,-0.3261955304669047,-0.5562027752390429,-0.5058847549378741,-0.41028358654105473,-1.0076175738787538,-0.47974177590658085,-0.5627168649796253:1
0.581895685950592,0.7853228033555997,-0.3867765460503443,-0.8922670292604524,-0.7825078216457204,-0.6226216030185279,-0.09660653125574939,1.5508401437394952,0.7282178433185882,0.8877690276491126,0.5772365328837996,-1.5796598466010523,-2.298334456099292,-0.46484347466431974,-0.23032484746741694,0.6365850221322864,0.2952627197443868,-0.054269774734316156,0.46983288331299494,-0.9901452156286747,-1.2191604292895784,-0.9827990622711287,-0.17326413292131698,0.7049949993796238,0.5149824448240907,1.1802060799875345,-0.1972676519243258,-0.2777697134196945,-0.46343996731084347,-0.6254140615629836,-0.233559265967915,0.40889336151189204,0.4787872353387812,0.5844942621313055,-0.03732504149568869,-0.38131412995988845,-1.2322180025316187,-0.6571568572334645,0.1043653206396124,0.3067067011370017,0.4380427613685651,0.5008266039833951,0.047111002227314236,-0.8875788892120295,-1.0344139912513624,-0.83809079967799,0.27131174476281456,1.0103758863092396,0.13535080003853084,0.34091974324431507,-0.32225774376433436,-0.2995292445731113,-0.6141112591702833,-1.0363890044324,-0.21643929996039857,1.1310152192545142,1.6627722416759982,0.8752806276813304,-0.38015733744796953,-0.3007861951606769,-1.0751373147613545,-1.000037501722347,0.11761452345199028,1.1646511974149667,1.4361058300810208,0.2605047929376547,-0.12581151615891079,-0.8293149636395614,-1.3509417681179334,-1.4323751711270947,0.45824733208698054,0.21684404972938287,1.161603147836161,0.647041681036773,-0.5576721485161661,-0.844379155436991,-1.235521878303923,-0.8542081495885077,0.35897979855524315,0.6439864596174062,0.8154385905691306,0.9122453349499237,-0.3265988507967976,-0.8855762354080643,-1.3447853328833066,-0.3727169157497763,-0.10761195723903094,0.36063271865770113,0.6969093441421446,0.31950193196622734,-0.08847953622152097,-1.1972468547164736,-0.8387287665614973,-0.3963167114466835,-0.22834339323452651,0.14874313935257666,0.2597573275665367,0.4173131491576373,0.07167339425883978,-0.9224488501517697,-0.6515918999318906,-0.7288751824962901,-0.09356058146673342,1.1239532823397993,1.2939116206375227,0.8977044158613703,-0.2674546055239751,-1.9278348737658013,-0.8756019187398892,-0.3762600349589315,-0.3231353695911038,0.9786544867281111,0.9509711650628042,1.2906124598441804,-0.1644626064838569,-0.5214500714115421,-1.1938241973645156,-0.3154581023021471,-0.14165026562508476,0.9699317305368467,1.3032321155921753,1.0055897520384334,-0.035086931835059294,-0.4752775092608437,-1.450793509120601,-0.34545398544308326,-0.00639254875190285,1.2603222960915395:0
-1.0117042010814894,-1.6276962864549467,-0.6618997691734976,0.49357092862659285,0.5162948555012764,0.29473644767818385,1.46746850995697,0.7646080661020784,1.7164403298119937,1.9549262768567814,-0.5044266376596558,0.4668214805768828,-0.6986837998888671,-1.2522064674461335,-0.5382157585888001,-1.054346272671596,-0.9827803257736045,-0.820585922817308,-0.8031990531739354,-0.23339589966025148,-0.19789872024797295,0.7058790275483915,1.2334631243927423,1.230340124707071,1.042807759767288,0.6569446754448646,0.44901108227966846,-0.000894356497477336,-0.8559765906933334,-0.6953518311546243,-1.3565879038564186,-1.325385791890766,-1.5182865906963365,-1.3783179240899384,-0.1565893141951481,-0.02789220377320696,0.39955780203324803,0.3109099429592152,0.5409053039815132,1.2840621376164452,0.935535986872282,0.6888625849181316,1.4205773319427508,-0.42184543096645655,-0.7396401340975942,-0.7148170973155433,-0.8546143291186775,-0.7165927423069747,-0.2947942967698115,-0.922490066153578,-0.410848344939254,-0.0329126963652599,-0.28863772820445777,0.7872379729447013,-0.4087033856313512,1.3920702435069345,1.0725784653133166,0.34930901500582406,0.47521633693846693,-0.5402935620493072,-0.2818256537729744,-0.14332850641966793,-0.7926838967352694,-0.4493691675606132,-1.2537220747802043,-1.3474274112735802,-0.3872471521208711,-0.09080904044707883,-0.13916116062546158,0.5846136503803627,1.0426265661677232,1.3124323438701757,1.0071333871021175,0.46423968707462393,0.49237413831264604,-0.3482778470248163,-0.4167646294478012,-1.274883699379998,-0.34626640092054495,-1.192939166992958,-1.043140453884293,-1.224862235231406,-0.504049038504056,0.46641406833244686,0.6026049763725202,0.5705821959236237,0.18441967530974523,1.0776760332737816,1.9097214349269214,1.4282016707006187,0.20578114692943783,0.6620367943770188,0.1739244274952721,0.4759980236031355,-0.9578759961637446,-1.2700183829552933,-0.8537876415506446,-0.9339491730017297,-0.6160636960253686,-0.08654302994384135,0.3448628789418756,0.4835648334958118,1.2210198036961988,1.3326901045905752,0.9870806825204699,0.3971085656961742,1.4010494704008711,-0.27569478917410994,-0.49653097872633534,-0.9419124423744486,-1.0894819069434036,-1.0653648415741983,-1.5033246866969023,-1.1946914188047755,-0.018608572855744354,-0.2626595536929647,0.1361257570107246,0.2012607838502613,0.9002369196533886,1.1473168453714382,1.016518770186388,0.42237714892095085,0.8563787729198677,0.3960377336082639,-0.8879662540891868,-1.2720563493475592,-0.6170542806572119,-0.830041507074901:1
-0.7849694096467561,-0.4966756646334025,0.0752322886750133,1.6082975985799146,1.6966869166016783,0.1881460037724067,-0.8983395776184442,-1.435707730281714,-0.9437237382836408,-0.41747496232720516,0.5402620389031109,0.8421571443046301,1.2181139834598886,0.5540022672596643,-0.22030564686827725,-1.3934295998774524,-1.1544305782774522,-0.6470124833492548,0.9775006677709837,1.1861220926790779,0.8813480629250928,0.5785097856380315,0.22478296325420205,-1.2379147185702566,-0.48981528306280914,-0.8204911888585626,0.330540737082608,0.3062202126669703,0.7534155336452679,-0.19399399542262225,-0.4233229506787203,-0.9716856734083075,-0.9872105061394921,-0.5474967879387108,0.4348462432669626,1.0526373162318692,0.4158838878771052,0.6887453752554447,-0.061040948663048544,-1.3982095160375385,-0.8393918864878611,-0.6493460847754206,0.09135691430285159,1.2710670504853425,0.8025908305402127,0.23791938041788083,-0.8101673231002245,-1.1734024301103676,-0.6264579748727901,-0.3023157716945406,1.3646484995340904,0.9908347693780685,0.29009956651932733,0.9371330955788224,-0.44338204242145834,-0.9939610053702401,-0.9504152097962911,-0.6246727768816578,0.295763285611724,0.4742446587450063,0.7039002170670456,0.6275088545177029,0.3699743827188334,-0.6896757335334984,-0.5664291677909844,0.17282090149094564,0.37582236855108864,1.0839134037755482,0.5879923850462713,0.23795931926168884,-1.2512978365177396,-0.7905335860173666,-0.48829419449205835,-0.4437152216916995,0.6319424954404835,0.21242678042259744,1.503148368542199,0.666843239199066,0.029341253365516018,-0.7373003441813755,-0.8875452524116846,0.13974813343325537,0.40217466186595174,1.563222085978833,0.52946254835189,0.23029271813729102,-0.2521590570860671,-0.7123728943632597,-0.6569213566070391,-0.3830275075074239,0.356992170914292,1.4286887345829082,0.36600132052533585,0.9338551932772369,-0.7634208435783839,-1.597180198663995,-0.426385204040871,0.010913379478150409,-0.20834379975955303,1.2815730965867942,1.326097635085821,1.3170286990144682,-0.6492958290899917,-0.8501822926067023,-1.1400077236254629,-1.0102116946712154,0.576515183208091,0.5344912099606871,0.42466920535083663,0.2963197050457225,-0.31657893171315166,-0.9873843158403828,-1.082557852124177,-0.5088463708840822,1.1466757216522692,1.032280172461845,0.8998453025003009,0.03755089538357875,0.07234622210883346,-0.7021171165717981,-0.8480585796106078,-0.9840166841459504,0.6492336186859557,1.020797918093181,0.7066043350867045,0.6537830731606793,-0.5826152219722653,-0.5946314752774724:0
-1.1082935769636497,-0.9682400045840676,-1.10878866903682,-0.3884490025517667,-0.7937353948704806,-0.4050269907019622,-0.08917052715123508,0.1815223019096761,1.2647627420013126,0.5245969261004378,0.3855411929817878,0.44368836009588675,-0.2942129718493228,0.3463345777294506,-0.22011802114183832,-0.9292475537617265,-1.1881748959684828,-1.2541465195382941,-0.7711125246198167,-0.12813365653581166,-0.5142709386045295,-0.4508987353140005,0.3011792198288866,1.0811176801261988,1.614270277624825,0.9214735974123365,0.5440820333489401,1.1688046593485069,0.35216715844711677,0.2549393395936307,-1.2296766056794788,-0.6709067906174908,-0.6392874614521542,-0.3801555712550241,-1.5463223747316763,0.403602400097133,-0.2651813140723617,-0.658449090983896,0.43536237696203006,0.32838392186780646,0.8119573970399723,0.8187222315689765,0.5484373917710482,0.42109265568116316,1.2612853027844515,0.5246090536466811,-0.6903747850388585,-0.7044993989607764,-0.8001773757332867,-1.4775372253212122,-0.48529307181663045,-0.6378247448375471,0.3489219920257588,-1.108621648161087,-0.06672735045041892,-0.09607926349487339,1.747453040774923,0.645314732021701,0.5305491440043879,1.491602406950555,0.3000498798477478,-0.8628239113737859,-0.21934828899933723,-0.5360720204898186,-1.2007168766188927,-1.561327234372147,-1.2424079924309068,-0.6371786294719788,-0.41929410095084857,0.4589611910697679,0.5583012269714557,0.7936929199580747,1.246717077293289,1.3080558512028104,1.315270502025524,0.3920706867264552,0.45129667970995146,-0.2856896003139128,-0.41458059011705695,-0.7260583855234138,-0.8997987434871622,-0.6215212938146878,-0.790331299457536,-0.5821924687734132,-0.9842066404406009,0.5360490068308806,-0.5419289672578955,0.12878543721214364,0.8899169613598491,0.8910467042355897,0.9980999677062664,1.264778509872604,0.12438633274709732,0.025108419477050337,-0.2707987478545683,0.2827555109229962,-0.24750830998089224,-1.3991533871325408,-0.1349934096794576,-1.7424546961266962,-0.6094650184323157,-0.4204387109528659,0.11202884174220651,0.5947257550126257,0.6170597228662762,0.9118001532928242,0.6074560222568812,0.09631294051738071,0.25716822931789196,0.22201769018843776,-0.12625241354233585,-0.8436605810710335,-0.5975615944533449,-0.6720963535613692,-1.4884854877697662,-1.3830056123816703,-0.2346278010363942,-0.07702832465265344,0.5303391790936874,1.0839245275453697,0.91838011221701,1.241428443866623,0.8544661312832502,0.9435634817677562,0.6932684464197918,0.13295104529373644,-0.7280568731084793,-0.6059540485413016:1
0.09850531664467865,0.1604509325884662,1.2810495493158718,1.3952935563410396,-0.26710879270719085,-0.8037922717428113,-0.6740773575293497,-0.4629438747739489,-1.0944244679974566,0.3973514540466176,0.09663932128620167,1.1629940099023044,0.5347036908130005,-0.8675329343859435,-1.8089716772575009,-0.7037667743777646,-0.742421550869441,-0.08212591121007373,0.5902970569385464,2.0822542770559833,0.47656044173581236,-1.0789953148440885,-1.3087474456063193,-1.5516210933713577,0.11642217626072382,0.2658331871721003,1.5174318756507117,1.5990447758957491,0.18515602319016544,0.058071711934460035,-0.6997909807631983,-1.7013111919219934,-0.8720436381755509,0.9035767269835844,0.8833555162033546,1.1705669539694656,0.4831017284229053,-0.9162625346462397,-1.1160205116099973,-0.5734623429057292,-0.35746536288230013,0.08566420519925716,0.754059840660402,0.6036071764601076,0.3707777236512892,-0.9878077595952561,-1.5446642094177119,-0.7967001221805138,0.009173823107488377,0.431092364825718,0.8066674928415427,0.7322876197639192,0.5727847620179704,-0.29855489297833104,-0.9938736876625232,-0.1822484611072822,0.19544524325616908,0.7030711602199698,0.9581135457878182,0.9304204371428655,0.5342063691473866,-0.9274841517498695,-1.3121763527116477,-1.1431716726204544,-0.061215417580630316,0.45236184524853446,0.5930039815425874,0.8139642482735279,1.060715323533803,-0.28486609917545047,-1.00631335127205,-0.4605684077470964,0.554064716224671,0.17196051983950428,1.0514447692317472,0.8593926780938497,0.3829429796324276,-0.5453260568941632,-0.6535787378750206,-0.574877980146186,-0.8861994147743433,-0.06410072820478607,1.016457827676016,0.9279742281492406,0.36661748057206817,-0.29828223358311196,-0.695758829933227,-0.9133687934798028,-0.04256152956118542,0.5345404092353541,0.5273286012180607,0.5014020673183209,0.6705333062541816,-0.953145729370368,-0.6558349377812952,-0.6931519576852734,-0.31854954641436845,1.0050511664522919,0.37928250895164217,0.8575917545507491,0.4598278319231358,-0.17301467937667553,-0.4102749162728605,-1.4602992575515295,0.06336350780182415,0.3351694295542326,0.9328083244084795,0.6966637499819694,-0.4403027492037798,0.009263962844796358,-1.13292415077261,-1.659247349788735,-0.5505402014653513,1.3931196982404952,0.9399435647438782,0.8611166322961425,0.5304597287833492,0.3792177518295157,-1.3714650669725819,-0.955227170193848,0.559574029761638,0.08725836554314864,0.9390301961828623,0.8949731018842669,1.0228450629732235,-0.7688166898956721,-1.1603208974232344,-1.264666829681508:0
-1.0555964565693903,0.47473925495534314,0.5808692388868695,0.3183499369436582,0.6814106409463943,0.6440528597049315,0.8311209934660146,0.5000164607562734,-0.06069003817292282,0.16163483956738692,-0.26346226646611176,-0.1418712614118367,-1.2352803044963399,-1.0465058841522603,-0.1796074006021482,-0.9905677909352295,-0.5354685558353519,0.21639032777388004,0.04863466108358444,0.19845401311192445,0.5947658737736963,0.8541479231930299,1.1945954441238513,0.336327915790963,-0.07428471749979765,-0.4135044925496346,-0.6311889945889297,-0.8497261452068982,-0.26675942745231074,-0.7258182745918572,-0.977877668081883,-0.6256869324390679,-0.2481162669705052,0.5183799786869583,1.3541260253566536,0.442374129420076,1.185306383391365,0.5525319673259662,0.9013791910751745,-0.08375802864631643,0.050728558345598584,0.12283445822294858,-1.0589354428266629,-0.7511279390152682,-1.129259272782278,-1.5212045511301304,-0.6704979829689559,-0.6132728613975825,-0.2636378928824473,-0.03252656554517325,0.7824245059875115,0.5509225258860688,0.46529143728310207,1.046480729334808,0.693870728969103,0.4028037931514241,-0.03179245961668234,-0.23235178142196386,-1.1293885059855713,-1.0284114608046955,-0.8396534522444954,-0.1200819226156229,-0.6328784311857621,0.3115338876468745,-0.42288459368726994,-0.07743947492367223,0.4622611360181853,0.7785972331957021,0.3391005077191501,0.06910534498662335,0.7822014705994171,0.09992158957068431,-0.29847781226462233,-0.557962185232372,-0.1545856938250295,-1.285419938607563,-0.4324589319328682,-1.477217177371166,-0.8393863390756161,-0.9254712851225935,-0.31817829919310614,0.23405942456228382,0.9759606660536178,0.34975243616661367,1.4847321025296885,0.8672912600248008,0.35199090511184167,1.764580732542091,-0.04319554930172709,0.41567144042386506,-0.6759007778309883,-1.024558394592343,-0.6968346508498251,-1.7095246152852754,-1.137709953540414,-0.6452042969947349,0.05477751189875585,0.14205048612301616,1.1765247883412644,1.0730134637943405,1.1869712680147497,0.7221441180332104,0.31721995188010443,-0.11078126639100472,0.9112065742918903,-0.4866307251561408,0.17655745985770654,-1.2965676236669457,-1.8179455857412798,-1.027090243847749,-0.5015135788030134,-0.30698148341447845,-0.3440771344271632,-0.18605188249617619,0.5501896347653227,0.8643740187356826,0.9010451666922168,0.1829714386747816,1.5523234767216956,0.9550862604684114,0.42608171608471,0.483543031061507,-0.18090897265872874,-0.6522436652131036,-0.22384437554341163,-0.31511653865964195,-1.5545145444702624,-0.719567936123138:1
1.5752798016070577,0.6013519681321611,-0.21459749684289664,-0.8476265114560191,-0.39094333534807946,-0.04581164696333695,0.998286179566153,0.6152214860420411,1.0521055289279442,-0.9847060276998374,-1.1008877209761359,-1.2091415810492738,-1.3346275644046859,-0.591790061290347,0.7584009672558335,1.33139108346918,0.695489963631329,-1.0689135519338782,-0.8593112199317244,-1.7712534476471085,0.1976253477347053,-0.2658131867265887,1.2640326463272247,1.2736144908418974,0.30062675062766947,-0.9097335313419536,-0.9074242240915807,-0.7108533002282565,-0.33781863341538726,0.6132430903352528,0.17671363953462627,1.0184503878598394,0.6660661616602229,0.09666416527276012,-0.6949011703721006,-0.5159100948937099,-0.06724628446741238,-0.2634790975763635,0.8115233658097614,0.9002762381047527,0.5931792231451114,-0.10061513537452763,-1.3590023005571181,-1.073584511180272,-0.4537516817069147,0.4194350189727406,0.632364743351495,0.8316726422468201,0.20303430709981696,0.7106425772819844,-0.11456639033206106,-0.5122300795707564,-0.1965971764533152,0.08477152220512243,0.8631545550233104,1.000762892307117,0.3896019487763158,-0.6016287654780876,-1.279647961685489,-0.6345352451504733,-0.5254698360862488,0.35716969857545877,0.5970240171076244,0.650759792793253,0.18652208015986788,0.5812539123592129,-0.5658811933493504,-1.1164929641188186,0.240150105936491,0.43274175533524417,0.414777189527379,1.2598963212381853,0.7084219862367651,-1.2674746505190746,-0.9848992364116866,-0.7919512821315169,-0.19578208868083102,-0.06116025913817111,0.723885893212981,0.48822690162297394,-0.0642711985351655,-0.15525710265486076,-0.6332417446822731,-1.0063605402012283,0.25134324504901717,-0.020060262795972977,0.743908753701226,1.206642758521423,0.655306543803202,-0.35561445088750165,-0.401566776922195,-1.7517217599269683,-0.35942726052643315,-0.476765905881105,0.7558985457488547,1.1439038524274294,1.1523877365237802,-0.3600978027149816,-0.2752598582454058,-0.7740909651008888,-0.1894282799684361,0.23653236799275043,0.4412293775323206,1.010093229171159,0.3651151998875134,-0.4899943454082464,-0.8293341096602806,-0.5471151417801126,-0.4635598027211906,-0.16056179870581583,0.3874943367413105,1.075477905658269,0.06837769084853346,0.11151085095723448,-0.8191764723377564,-1.132274932413512,-0.8467162176569107,0.23828322830122775,0.5600123080742145,1.3101821666354359,0.9487617370916184,-0.2832736257480648,-0.6523713884335643,-1.3647487955473827,-1.0357954939801828,0.9139089811180447,1.1070623821051548,0.460727935999255:0
0.6917755685071683,0.3303850075561219,1.5533765714555143,0.833758092291071,0.35442773605320954,0.1516641954617914,-0.29262294332062116,-0.9613456761134286,-0.8819698603343333,-1.8077375657687693,-0.9409935013972357,-1.3013471366737241,-0.5897447701167202,-0.017009179758856463,-0.24916501669175461,0.7730306168185371,0.3937960788706716,1.9080557732713972,0.880570318919883,1.1246221662721758,0.6967977704198685,-0.02396827700643331,0.7626377668299031,0.004033836905896537,-0.9139563835279243,-1.122617664155339,-0.9137894584447357,-0.7177999594107044,-0.461613774329527,-0.06708288287811723,-0.02166394632364249,0.7887521667003841,1.223049937718597,0.5138961631190435,0.7572160491427044,1.1255258564151975,0.5334880538979868,0.4109929392537235,-0.9943697639042937,-0.17705397249910115,0.013059230881115713,-1.1858056285197502,-0.9841096699691786,-0.7020022315169829,0.17880902723562747,0.006037565967375147,0.09904382429051056,0.9323954751381602,0.32220315460357785,1.8474616595562274,1.6397160679263234,0.8705956544395725,1.203464071230166,0.09487406676713611,0.1870452694679432,-0.2927211836864178,-1.2401071510326078,-0.38708188659652876,-0.6114753624172904,-0.2798486342333537,-0.49941696131674684,-0.13795013049614924,0.2605779229755246,0.797164730584956,0.41260224752478897,0.1094412430186601,1.8382616394986204,1.0522168397004514,-0.1811350405646029,-0.2637818419933543,-1.212525414808307,-1.274003947985249,-0.4339422131820953,-0.6798455279112715,-0.9015977159151609,-1.824546837687442,-0.24115784371215504,-0.4902387919769324,0.7963306033963939,0.41938773315834765,1.542970665908411,1.0559550302211849,0.3095339933022201,0.2192876256469426,0.7258599383463377,-0.32579638114076115,-0.27193961663335214,-1.1391892194534605,-0.781668218644548,-0.44245317029682074,-0.9084061973196684,-0.8450530886865868,-0.03245563111913485,-0.9968041660893147,0.14820857028596707,0.7264444848326037,0.7217406680681605,0.7690397673360745,1.419010488507528,0.4675249790584952,1.0630446904865114,-0.09419655972786461,-0.2957148999637497,-0.8411345178897814,-0.953771293305847,-1.2843379239920254,-1.6789203663854702,-0.6353108502921281,-0.4889984436410755,0.11278565879806923,0.5681859733497083,0.4017751382817682,1.2793305539002062,1.0895964104770424,0.8399104806667044,0.8098126858586744,0.035700689616396664,0.23895438416849735,-0.810308294869635,-0.5857863107669308,-0.5019126925703963,-0.7380620188883992,-1.4103914256503607,-1.12343449858148,-0.5098459064548556,-0.6206397871759713,-0.055888838756680825,1.3945044050326962:1
0.18686466659194145,-0.048882085647476425,-0.5531383464029616,-0.7670426865200333,-1.7103024674983733,-0.7983041016222254,-0.23354981383999662,0.4000252362085336,0.36831781955580184,-0.08101942595694206,-0.424724337263124,0.054908127268750606,-1.3240968794107175,-0.004446697898953328,0.5532348337245775,0.40840664298090124,1.0139640064013888,0.1856515943098335,-0.8592151221453364,-0.6237253551079602,-0.9671529282687222,-0.33719839166821347,0.025573545223501193,0.6961673040106688,0.9171587818716275,0.30280707716780186,-0.21151942052108796,-0.9228964367862329,-0.8408204887204765,0.40708736612414365,0.7233231503806005,0.7047143211880813,0.8890358540541331,0.10189553177153657,-0.5432686270465771,-1.2563486298161597,-0.8077155249574811,-0.5349279838014527,0.2904597481449612,1.1063072658678026,0.5647024369732903,0.11879506485929081,-0.6700537280755392,-0.82942030450524,-0.2610083473750162,-0.04306940344345758,0.5873570329061422,1.2456616979816824,1.164367326189674,0.5112680123546642,-1.200323472848876,-0.7106484408306338,-1.3029190270396496,0.0704290136135732,0.4911526779938817,0.5031453275805977,0.5444830590676634,0.11696629185186987,-0.5075380421016812,-0.3434322543819628,-1.87261599327331,0.62124500890797,0.24336003947830592,1.0822720761199198,1.6145144852536184,0.3785052490466957,-0.6659160082025279,-0.9392481728685786,-0.9338647991129805,-0.0569827659609532,0.08118234060911289,0.5998879365945328,0.9405784205053453,0.5486850001370622,-0.17801024757422462,-1.3427215094543534,-0.866819518517635,-0.30987149661180746,0.289478949374117,1.0702394762104952,0.6639703591178795,-0.3885060380242259,0.0633019929035521,-1.109795011563355,-0.7637893659132016,-0.3293960322031496,0.3995124883656471,1.225713451269653,0.5177508507672134,0.7850272822793866,-0.7922906822189233,-0.8264600681383987,-0.9635282221260661,0.507535932499081,1.4349797148532861,1.5092867970472548,0.8153568723332206,0.6863077244512454,-1.1332266483407634,-0.6158003002994966,-1.5367059761704498,-0.053110028852980884,0.6880565413170293,1.3336403356180335,1.0121994130120489,0.46475095561596447,-1.0724738717601217,-0.9555821595825118,-0.43406725964252635,-0.693049029931591,0.8002970777906832,0.3925695137190195,0.23433175369320136,0.21939382127890186,-0.2374150728594499,-0.6896659863131109,-0.32373949789409673,-0.28216941137985063,0.8957711793493863,1.108790536467002,1.0887974290141924,0.101770571419048,-0.974787392226677,-1.013384133412733,-1.1071863638362671,-0.25488211899528074,-0.19335288064000866,1.4592704811829627:0
1.4794277980724546,-0.23745102132248952,0.16079184596729068,-0.167506103558654,-0.8123792971830895,-1.473753384480439,-1.0352722148247253,-0.5523039695516905,-0.5486845951534951,0.07994518480325019,0.30486211122363305,0.08236693550305935,0.8985848038440754,1.0566659240472516,0.9789468603596322,0.8925727102484463,0.31306438098274064,0.24407713997632077,0.37789191794455085,-0.36982788472448924,-0.5414436379477872,-0.7758107510832892,-1.002387901855076,-0.8581139820438622,-0.6596855051699616,-0.1730030783206168,-0.8240703799546543,0.3657353489483576,1.2203704887301292,1.1154826367505886,1.3976206834835874,1.1281343527149978,1.1980655542054919,0.18678157063209982,0.41312902214644964,-0.4907229845768023,-0.7794830961986098,-0.28765958854800344,-0.9967302899745827,-1.3706624005910584,-0.41295362775538513,-0.942471289518026,0.4069054819506802,-0.1897234457576012,0.7645863640479047,1.3057983572482423,1.3141080344961775,0.9875664857267795,0.9604864465171458,0.20140827469173928,-0.19556112856105912,-0.23118959933773237,-0.2113210365463123,-0.7740654580706441,-1.9114518252657207,-0.6462979871213215,-0.7120937929904055,-0.6932077834213821,0.11191119930515453,-0.054724376013630116,0.8135202740864854,0.44484496917443295,0.3227595698622958,0.8717729881469998,0.6327272489467909,0.2697886135365162,-0.5282494543447014,-0.14016149926555446,-0.7599546101979762,-0.38689182294259883,-0.6265928235323757,-0.674903077864042,-0.7866119868386685,-0.3289989051567098,-0.2678216944473481,-0.16674089851882434,0.8394693179997776,0.6724438994565806,1.2267859860461678,1.309748687039583,0.43971172481894266,-0.3566829065829764,-0.2192884978345484,-0.22849593840222954,-0.5849106083481113,-1.2184890682377088,-1.7368667112208018,-1.447653202102489,-0.6459428572692582,-0.061942355560928364,-0.2819921301535111,0.23391734113371165,0.6124658373450427,0.22669534268492675,0.9869285587199268,0.8962506148733572,0.29707935787555106,-0.20729194564433406,0.13229778168780867,0.2564581519556499,-1.0616422808170238,-0.8514458867974228,-1.620009842211397,-0.6002497635661098,-0.21887397160700495,-0.0822114062146197,-0.3556079369464064,0.8849780824566151,0.29018579303931336,0.9605018176837742,0.7502785098607314,0.5398595545660783,0.5629521057958891,0.2957632818310485,0.10636387972596903,-0.025911815899248958,-0.6513097979488125,-0.8835976770113664,-0.5542259916488568,-0.65643245470681,-0.8653090309021617,0.06406021644388399,0.1043440323822393,0.3789301603604473,0.7370094154296485,0.8109809228394558,0.8598275518059205,0.7694052906889274:1
-1.0189141716010346,-0.2452324097998168,0.40526383606160055,0.8506447616314414,0.5484921929443708,0.4090398789347359,-0.2611782552457684,-0.8922941028995254,-0.9585487022885141,-0.5066636447081413,0.4589168437792972,1.8074211082919285,1.352855921776159,0.37961157613458396,-0.0018441460453249015,-1.7110687210525812,-1.2145821990174401,-0.5650359017727542,0.77126987486658,0.7410571895015161,-0.08075506113135078,-0.2109732589162557,-0.5792429415037073,-0.1175054790008827,-0.7354285886858186,-0.10180687238099823,0.7096417039729233,1.365220527807207,1.2864517375678701,0.4900306989218297,-0.565382831295556,-1.2153018488877587,-1.189199145494998,-0.032660647684302546,1.4457452066314747,0.45388195110962415,1.5065119710382473,0.3220219483022537,-1.1347950471508135,-1.5195359978335152,-0.6678315198063706,0.07767342053110399,1.4744077317388251,0.6857052566617705,0.7082929460103666,0.78674437726227,-0.581400644073613,-0.8507435291880118,-0.5908080972350349,-0.5215896358251563,0.7011388202146442,0.8495540724488355,0.7200883908973997,0.4306659070409848,-0.3705046116101818,-0.5279630825765133,-1.0848778012417268,-0.09014936208903723,1.1445053201504454,1.6882982437566656,0.6290747144043131,0.6751672818176744,-0.8907078068901308,-0.5839885472402819,-1.220540541941297,-0.608648784702387,0.7853076087489408,1.0178302316807175,1.0961389195157372,0.6597818241551574,-0.8012942804479297,-1.1535484229641462,-0.6005038575890294,-0.7476035255878435,0.9988149313297997,1.4807670231428016,0.9717277369780799,-0.4442053940511185,-0.5240396505670906,0.7692304791276882,-1.3516223053845402,-0.6842461219567108,0.30152575684886535,0.9066293522494207,1.0553448723648966,0.08201711226071046,-0.11885226933077397,-0.5084533756298983,-0.055665520226343745,-0.6602029945676715,1.3092388229986152,1.5482009712858797,0.4570007081849231,0.7551449979994846,-0.560756697268819,-1.2228400679305467,-0.9718526050638133,-0.5120872748552584,0.15151244561324057,1.3340416611175983,0.9463538896805355,-0.32868664901624584,-1.0618888202170385,-0.7439816089718656,-1.1699891248866519,-1.1002619014027228,0.13146928023822868,0.15394458117027865,1.1358737640184746,0.9165671333135557,-0.12310582652887597,-0.46583566731992554,-0.8653161752700774,-1.1501568919749305,0.9133478544303297,0.7160391311356071,1.1537231551243468,0.5714076934987963,0.16841482315070466,-1.2643030380720985,-0.8799212792199747,-0.2453580922727435,0.12700150369269114,1.765729034846512,1.703230011488543,-0.3171024462051403,-0.9435354971984464,-1.4037559881114468:0
-0.10716731935360124,-1.7381951202931376,-1.4008093256808198,-0.137538403311589,-0.03878773331290595,0.04023510811062608,0.7688294634526727,0.7784891572907804,1.6872855043300359,0.8137913934168005,0.6504035718875957,0.9431580600028963,0.1007185910353798,-0.15836347887616234,-0.029034698484249,-0.7145936675570974,-0.35632040549110366,-1.3598271914964815,-0.47553655546932666,-0.6409028503531736,-0.4241356167674052,0.5169725209127942,0.3264377269972389,1.2791238695822962,1.5043803081249771,1.8549625149979376,0.6449231904832612,0.5184088454219552,0.12110495380900352,0.7763750138556668,-0.218126706458727,-0.8840455045064219,-1.35710678437818,-1.0501791954113486,-0.5589728661633417,-0.8627800022015646,-0.9261557191279053,0.7041768150754456,0.7842891068142376,0.9836971417755749,0.8867967716921026,0.019050083472370027,0.9212906565677081,0.3934230842320897,-0.17502292397381108,-0.5987773506505736,-0.735430566348678,-1.3838310157476597,-1.2410719050694283,-1.2045298094046963,-1.0143940535297493,-0.16353446096081348,0.1017373742185043,0.19211086238265815,0.4369567895809483,1.4855440982963064,0.8049764154393183,0.24302924504194623,1.3541439612550155,0.6578162047850884,-0.04845992762812702,-0.07449413223443657,-0.5614613350852198,-0.8806632095274302,-1.0772583581395159,-1.6639687388552313,-1.5375211845289911,-0.2899245315657973,0.16966150141502956,0.8496804471023763,0.7044029651820685,0.24129184794285763,0.7008831956478905,0.9785019199137345,0.7298460378680739,0.31862964382632974,0.3764098865257698,-0.6431186162161782,-0.1585089311360402,-0.4459196757420014,-0.974734815118024,0.08732090553684269,-0.2757031956690892,-0.8366112136545176,0.3213915195560365,0.8539376356605393,1.0200100160992416,0.693384409738844,1.0923969520988297,0.8731211729396987,0.15052640576295717,0.33084448599468186,0.1999656914667476,-0.3898096748193819,-0.6915536257730378,-0.21694603973448778,-0.9665663095236772,-0.7511807152030412,-0.7592289062186309,-1.1636290450254643,-0.2164995155137791,-0.11957842001684932,0.3331028708653593,1.459484360018842,1.1812881552624153,0.841231048041915,0.8952330530455053,-0.19745966774948093,-0.21670136904133108,0.5661283766118718,-1.0196687743724273,-0.9365768327493801,-0.5235613439014943,-0.9554003549609135,-0.6210352005229768,-1.3305082980407184,-0.05978136517723317,-0.07807998191832272,-0.012988984412639737,1.0377488040267608,1.1517549956903086,0.7729974765086456,0.6494599173154629,0.6614814829953204,0.17335986618862428,0.3068225888779198,-0.9098777079325013,-0.36377124462859367:1
-0.5519538819472972,-0.36026783878601054,-0.9906367792547801,-0.0690837646114501,0.9716030494971978,1.1988946675483605,0.22552417781199866,0.07540415015836621,-0.583871993319682,-0.5548773490822057,-0.013328144480041937,0.3811591219759453,0.3043181485629153,-0.13381299011819092,0.1533679737250621,-0.7119730987827633,-1.0998263812181626,-0.8330490546862148,-0.5436555004586783,-0.21611539556458625,1.3786937613648695,0.3672998416066203,0.7171132091012289,-0.1177129810330195,-0.8594214153075159,-0.34589414000258634,0.49954716365684276,1.0505124717143846,0.8101356753326167,1.0599289376915528,0.49930032806053126,-0.17865163461433367,-1.5303758358301192,-1.1375806719232695,-0.06678919682030665,0.18859838897258688,1.266019534104513,0.6177190741515484,-0.169124479980517,-0.6921290298915215,-0.825453420488066,-1.1058928992526018,0.00043255939668290777,0.8493668285442078,0.7922472080498761,1.315688509272709,-0.15259000315750898,-0.6540342963830046,-1.2193747911599246,-1.5885757683778574,-0.7691256851693544,0.05607814566021552,0.5082363860137312,0.8989651620696059,0.3374970511517213,-0.2076756303106196,-1.278934776280162,-0.6462295737365018,-0.15777331649549742,-0.17594951559716376,0.8852300191990615,0.5950500711670583,0.4680723914975573,-0.45981951561330714,-0.8111957878957939,-1.2646889534843817,-0.3812393198578731,-0.49141746371770384,0.9704000859345168,0.5764740368395147,-0.06138190313297015,-0.2096839266921412,-0.8692950179762823,-0.4838675324026674,-0.4376416841325596,1.0150872283410675,0.6681767100071561,1.360833397054356,0.43341698686733937,-0.6634233757688304,-0.9392879404004825,-1.5855276363093465,0.3590349633194333,0.45005271288430243,1.2003689400019195,0.20509644054766352,0.982926743773127,-0.3001998410508345,-0.9123104819608412,-1.3472532681539637,-0.3126797131135908,0.048459802296624,0.7410569110828683,0.3851643440085245,-0.2602868645305455,-0.5449010992667291,-1.6743235235268035,-1.269814223522003,-0.6755075144500698,-0.1901765423270706,2.028749528046589,1.1786054241569572,0.17938319092813065,-0.9008468989256841,-1.1264194688589162,-0.9067049572588031,-0.8198210281982322,0.3257765901119724,0.7262713644084913,0.4831634939060181,1.0263012116439378,-0.8817105189143004,-0.5245344155475089,-0.5245508463760422,-0.12646376484357424,0.23792196549516811,0.8540550499418542,0.8736165159353044,0.7889701465398005,-0.04498703752574834,-0.6648187825108972,-0.38590343124629567,-0.4909505891074733,0.5285595951872739,0.8741101258068793,1.448242485752592,0.020756650258225873,-0.6002456152071602:0
-1.0979518556401073,-0.8144518358190261,-1.1849096107284158,-0.5583674535231965,-0.9067423131142975,-0.11240235255748998,-0.15300204055108266,0.7051655731591331,0.41025329443286973,0.9700852372384582,1.800928040905097,0.8530775203850703,0.8241774197491173,0.952362647733512,0.01713574010278511,-0.010777619752064094,-0.5756427260980839,-0.31675390683103777,-1.4172458710347313,-0.8873951548101341,-0.5674080595407658,-0.18021450921556614,-0.18360001861682204,0.1321228042341971,0.7529356514838075,0.19404806485872983,1.098726510547979,0.7141967697508596,0.30075560542795177,0.41292581287913,0.21793092921824114,-0.33163641504593894,-0.9096071510412852,-0.6584226525506818,-1.7287530083012042,-1.085777197217962,-0.43706779243648297,-0.1919445464196907,-0.43709312099564906,0.1433244275584128,1.7923159665726232,1.0521898603913233,0.9245273293659535,0.9531035561294378,0.7361038816763917,0.11844933016116255,0.18477194445073142,0.18922680134804837,-1.3903116605983794,-0.13374048162772623,-1.0210048508373493,-0.8890571106933107,-0.053225369613623896,-0.5347967590024452,0.13194443128183622,0.28234947529018434,0.9758674702513451,0.7649699960483054,1.9899301165413443,0.7069212170054366,0.6181962693158067,-0.1239198271432248,0.12772441752543542,-0.78806034430115,-0.544076084142542,-0.7431343789150894,-1.0626701671411984,-1.692013206934471,-0.40632353887536066,-0.7373962974862991,-0.2876488617284201,0.5901852800039139,0.9729570223488788,1.277953997022946,1.545132735506337,1.8150916491789308,0.836951287467856,0.7702966103848312,0.48045061847255366,-0.7339224593417486,-0.7870877485350712,-0.7298133936632933,-1.0882587137574848,-1.0263102742131553,-0.33410373358537027,-0.6754961139072664,-0.07666387481179084,0.08143566522809165,0.6933818900988121,0.9458452411121734,1.1632522842376107,0.43776221295069656,0.6710168125241408,0.21413587473017898,-0.08694775531414124,-0.5362222170373313,-0.5211895715888842,-0.6508296339143742,-0.6651531453758293,-1.4585470026422793,-0.47560797816879374,-0.20891440361632782,0.2364375351668789,0.582504885345019,0.6807092282632136,0.1403414618729475,0.9087742809605568,0.6867495970194105,0.6058217681840964,-0.012139647682823385,0.06802977029172246,0.18386566041289681,-0.6309955492165118,-1.6375569125730993,-0.7779723242119372,-0.5705459615698767,-0.6353527763110978,-0.26725347251757303,0.10664899442568068,-0.23348424027097292,0.7771208940134187,0.5204943405066984,0.4416521138609667,0.8982051561386536,0.23747958985555717,0.33074227224577046,-0.1631339463101411,-0.7235398253903006:1
-1.4237427040220716,-0.9701273795923477,-0.3976029428459019,-0.014714686977781805,0.08117653989048135,0.7889079483008881,0.15785091308478522,-0.09531130114305841,-0.7521606658087341,-1.0314954086970924,-0.7453063549573304,0.2778495085116789,1.2832641956391067,1.1789195378314925,0.8834904994658308,0.47197710823619843,-0.9380841795586982,-0.40739064109283185,-1.0196189594414968,0.1528898759825516,1.5638575303640732,1.5561211057208286,0.854150699979394,-0.3126064601134577,-0.3946733370131946,-1.1633075480570507,-0.07261689664291565,-0.625101189911076,1.3313012511467628,0.9712240057962352,1.0026274430165165,0.060423496266959975,-0.7075517096606616,-0.7591693994018798,-1.2309669262106526,0.9905823512399987,0.6425484487186007,0.9621449001317335,0.07597976343451279,-0.6903220921797949,-0.9252580924984009,-0.7688661201480809,-1.0986256648286772,0.6559410102943484,0.6383847810581972,0.7645931900393274,1.4993747377147597,0.2857852967320559,-0.6341187927827379,-1.3322468313422324,0.10462405954015541,-0.22315956757058628,1.2991433690466234,1.2665516695710648,0.6505064435084903,-0.10497668018526465,-1.4550642311993642,-0.8990937413082704,-0.6293050806965328,-0.46385314322594834,0.7503006024772529,1.2762004070368256,0.9081227528378945,0.33982402095493064,-0.5038669262358317,-0.7428940736568155,-0.4134625509137052,-0.41823502581443966,0.7117751540477224,0.850302761933923,1.0181105082900215,-0.2708441128577261,-0.5703082511312295,-0.6894842641859684,-0.5362877893650724,0.6237120277318665,1.1844173884475777,0.8786485124052537,0.6118394064076079,-0.550102327960908,-0.5879438449869285,-0.6851157699977352,0.012865301601483137,0.3011670211040709,0.640104788989922,1.1812523125272985,1.1248799713343596,0.08359604782096855,-0.666503260915148,-1.8999228083512127,-0.7321121123111494,0.1818804537143523,0.19485206110212905,0.7466678046197416,0.15317018155453332,-0.015216758151178372,-1.19995412050923,-1.2448577680273754,-0.9352894895599162,0.29310675547123843,0.38980337003851356,0.6066624579643881,1.0295014581258113,-0.1389189530256958,-0.632789606942803,-0.5653270277105436,-0.8582678972926157,0.2586565654024589,1.012792821270145,0.7738505298361733,0.5305216250677905,-0.11357930989752418,-0.9305977912701302,-0.9741056221194859,-1.0506845532935776,0.18582675869610818,0.9641200016373161,1.5688006971835524,-0.14091981799338282,-1.0471643328569527,-1.2070720130151875,-0.9804702634255023,-0.6672907795579276,0.5450995784327164,0.303658114047645,1.1714947286971673,0.24831496357503474,-0.479432545992283:0
-0.6401803261971761,-0.6198357098336201,-0.48898867150472447,0.44867435942976686,0.40730226334327563,1.301044959046884,0.49297721473366585,0.6937409212890486,0.2845549575773718,-0.24929295643110833,0.014211301540842363,-0.7289088506849323,-0.5403840120348029,-1.1445988091680017,-1.2641019937853493,-0.943842284283609,-1.095170985029361,-0.1442479964898581,-0.02109458929773112,-0.3452691764950214,0.9766947072138336,0.7728188241985257,0.2863318432666325,0.49216510804182056,0.8688690499440063,0.29783848861491236,0.272580811646614,-0.42235930783267317,0.1278995067696218,-1.3186168973214207,-0.3981192264579124,-0.6475335790528078,-0.8967220328079424,-0.5233445725662177,-0.17461871048072375,-0.17828212508162156,1.0963118573437882,1.1999051154142752,1.5505952339972848,0.2554954271305748,0.6537118062492874,0.3683569269294287,-0.045942117126520646,-0.1540111354400333,-0.5453590905002598,-0.034450279202590584,-0.4968611420565906,-0.47584899770951294,-0.7878046479342015,-0.6581382627636922,0.001414902483646785,0.26075473997472126,0.4104555510850186,1.133433603974292,-0.16470865865671158,1.1992760543086984,0.9113078845467001,0.7885590959405391,0.6708636901054933,-0.09702433189623394,-0.4130711697431559,-0.6637965356054603,-0.7944652268165447,-1.456920474261233,-0.6315883097951552,-0.34865422246344185,0.04694777503420499,0.03808233642577086,-0.0027173344200432936,0.39657268219181074,1.2170238458401452,0.6579761538912962,0.5771724516056188,0.3880905148126967,-0.10163792406597753,-0.6469456779585363,-0.8167442401191796,-1.621588717343929,-1.0601351568372064,-0.8692055459855763,-0.6948977536422581,-0.9211943371521282,0.4857843747613968,0.19361518729012467,0.5566041200281086,1.3963462777888926,1.292962068590825,0.5530567651749554,0.8791057331281323,0.2945093890097949,0.04483095581599957,-0.7107353272804307,-0.5864338123296413,-0.489019128007706,-0.6612110645316218,-1.3426974857577807,-0.6988330027497115,-0.89021965618001,-0.06905177222884237,0.40870553422071976,2.0352263478758448,0.7800523430297133,1.0200833061659662,1.1643098831899792,0.9972499017956064,0.45516287108094927,-0.16675351877130368,-0.07475519689590432,-0.4687001749347195,-0.8724974009114687,-1.46711192327613,-0.6095604542844408,-1.4570869644924833,0.08189958480279436,-0.11520312955496473,0.45405456371915703,0.6018387365889399,0.9470744189667977,0.876062789131004,0.9767492022540503,0.788353966620412,-0.09978326266487736,-0.21473144033110395,-0.08716190572234866,-0.8191228031503932,-1.2283574451940915,-1.5058287595383888,-1.037083327157083:1
-1.0075599135567432,-0.35244007808895295,-0.41565258320354675,0.848187966579218,0.9366726719383343,0.2506100445790233,-0.4300891522870386,-0.6407499794649694,-1.6557742015903933,-0.6627771803862298,-0.09335270681123378,1.161852217694784,0.1681730510158964,0.5011237921140225,0.6280923221604386,0.12748719674649311,-1.4583692751281565,-0.21772150980994198,0.05489929367645194,1.512617442140583,1.122374382115871,0.1732524301277582,-0.06629821462379185,-0.9874216866652141,-1.3738267599619496,-0.6157088942445055,-0.14595027399436108,0.5305660057671744,1.1070214610631997,0.7002735399630599,-0.28423236171083044,-1.1994748180802226,-1.24670230026751,-0.5927418212416973,0.11114125475101919,1.2924722180824006,1.8744662638976348,-0.2437462319727356,0.12073939271362649,-1.424984777928219,-1.5105702404389498,-0.4950581169093974,0.279477612436137,0.815272359900863,0.4093908153669764,1.6078418367509153,-0.2839955573436865,-0.6497733241910422,-0.6508697882591956,-0.10344325900482787,-0.024965067491326626,1.6917315125496466,1.2720847629628724,0.36861832987396104,-0.7395730964120661,-0.5657445330872961,-0.777725489686336,-0.28298047976873436,0.5420559771205411,0.3543769871381631,0.6394078433686243,0.1891264937879083,0.46405812935818985,-0.5299320337398978,-0.8802476114792508,-0.38773531523262106,-0.16385519733597756,1.2291876349297013,0.3431191368114723,1.0705626019176584,-0.7775292536558016,-0.7774828730581086,-1.9279110989666197,-1.1236066959223572,0.4386005286916159,1.169235687896919,0.5760138856574738,0.9941146171227921,-1.0135809146276116,-0.7186673088571294,-1.00557311316552,-0.7863899047342713,0.9571678986962052,1.1387205100225883,1.1628200107709556,-0.5258725908129773,0.0326698700315865,-0.8562621104171122,-0.9986156436144065,-0.19032480690873543,0.4901573391574141,0.8860183630181634,1.253285077249784,0.7383957487972949,-0.32164561218181403,-0.6356727837612174,-1.008482076569902,-0.64553631720528,-0.05083508285091892,1.4978857513849135,0.9281595578932407,0.29072705580401936,-0.9710147014601287,-1.3929343334918896,-0.8580294888874531,-0.8786612330811914,0.2831553162512263,1.1158564157106772,0.23989568745048162,0.33242811289558044,-0.1697584122912601,-0.6913243925252999,-0.941232925465719,-0.4101321522064538,0.35178321231018134,0.2262501652808071,0.5969891838795001,0.49853526589722513,-0.2829776895922733,-1.1425818344933558,-0.8949166875629535,-0.8042046838205195,1.074195054529998,0.6593356476946886,1.1639778413562485,0.7186482541025689,0.32399319893662126,-0.9810981916559709:0
-0.34130150635435474,-1.1202143414844175,-0.6069234389080413,-1.1137487050790598,-0.5885976640975451,-0.25396345358935246,-0.037400128709022595,0.20274715023025916,0.5392361178306918,1.2049342642613485,0.5954017904237701,1.3712117529799073,0.16725181950111434,-0.05323751904797841,-0.1635749723882652,-0.3145981243120339,-1.2014393221851494,-1.30387083249091,-1.0005190186980348,-0.7886036971851729,-1.3989491442665059,-0.7245055421568302,0.15680378798690606,0.437050270823308,0.32779114839846407,0.8002923649194909,0.9631857270985188,1.1980883433229366,1.0849713897209636,0.9242144684082536,0.2466983182548674,-0.367102326501209,-1.0671438751834057,-0.5869011569486222,-1.3533397133412937,-0.2607281070618176,-0.9657178803656263,-0.864359762060108,-0.25459917541298993,-0.16081292810652797,0.09232827148271205,0.18833898957722262,1.0651004169294591,0.9573837804551114,0.9691373092332769,1.044254211535866,0.0355672186053565,-1.2791701981364854,-0.8401957341607895,-0.6907560292889198,-0.6275255691609456,-1.0344446281554847,-0.8642173868742301,-0.19365477492445393,0.10279332701943267,0.10896905286010994,-0.02758076002628873,0.7793779357389626,0.6710314108792566,0.37709494616064976,0.8156765546859186,0.6713699194066636,-0.11130816136992905,0.21404147902741916,-0.9418846582958915,-1.2739191522654858,-1.0051961940514134,-0.8862703267627556,-0.6205242955481977,-0.14807284983282815,0.0920922244542596,0.04169318446882597,1.1730592595096152,0.824586680731165,1.2744231546254494,0.829102046860309,1.3520489269155878,-0.4564661212590561,0.04235514119916213,-0.0742996474360752,-1.0380397583240883,-0.6131894024425912,-1.0703789515487836,-1.4137746822788957,-0.11043030971409462,-0.27142871057065715,0.0024246231080487374,0.5947498861888294,0.8483137443168328,1.6162260288721244,1.5033834969563253,0.6074775437916313,0.8241362173314482,0.8866257308407774,0.43380555848142127,0.34849104514403234,-0.15265492778294332,-1.2381436375711805,-1.170038947206974,-0.7928513520012868,-1.4104066849149597,-0.7129441087132662,-0.15818698453202726,0.01468058564135033,0.5954590018569419,1.1211798283113343,1.5260568030410564,0.5389442149279067,0.7078735570156732,0.06907671661554071,-0.06600699516739716,-0.06484523236539141,-0.7258163971895314,-1.1914148812637075,-1.086495225135902,-0.44888473436960497,-0.3055432551977441,-0.011586150700614306,-0.6528007600253671,0.44900021700321824,0.8407999392411951,1.0118733988807485,0.6952309122432616,-0.15637681666006298,-0.3783410350703582,0.5115876503785042,0.5915790699985339,-0.6672904853082265:1
0.9503269710528497,1.4090440968498377,0.4209156860286933,-0.1566220449338249,-0.46500173899840425,-1.1104663016729563,-0.8780276415166628,0.7487971629915393,0.48062335900695613,1.3439046867487499,0.6662085095618466,-0.49331920102822213,-1.3013622212802047,-0.606592581064695,-0.7513873594772641,0.180454286615857,0.5567264973031321,0.644017166972999,0.37773728517158023,-0.4902227633367716,-1.069013906056956,-0.9012242779232833,-0.14362246043739918,-0.04040120105671094,0.6060791237393434,0.655396825169239,0.583451728068542,-0.3708286863447029,-1.6463211445982942,-1.52418598827066,-0.4700984816291667,-0.251095235403975,0.565390032987734,1.4466779142483834,0.6220598162924234,-0.35308453867647155,-0.9356684883344941,-1.0211322249002612,-0.384744105268205,0.23750798116881006,0.8438656067364994,0.6841756590285847,0.08940812844205454,-0.21459066664237084,-0.3793718066414025,-0.9736770364759629,-0.4901485310804442,0.285491299325224,1.001197988362181,1.503708119108682,0.23401866605512167,-0.4141772467241118,-0.37934059412023863,-0.8561079587778434,-0.7809308180128146,0.41782770024663207,0.5115548338156961,1.6193468476204282,0.3840539489190724,-0.32029749554924775,-0.7371570299936916,-1.274403019384756,0.1723141618416637,0.5095763613255375,1.5579584216123858,0.44495138287933256,0.7201842527134272,-0.8694891688654187,-0.46930246458175345,-1.2578258711530588,-0.3104351547930076,0.4166088446022156,0.6358390903121051,1.0488786929520255,0.3975704382794438,-0.391621225076222,-0.03783730739536706,-0.6392500496559097,-0.7394406839293817,0.3957542801080476,1.3536469054453477,0.39531892401934343,1.0717426548329534,-0.030045984445802726,-0.3227475205132011,-0.9971744544249096,-0.35343507408152863,0.21458629308800845,0.8639688555159937,0.7876537391764648,0.2208341381977061,-0.5021683946378407,-0.6307624596577228,-1.0209077115666791,-0.7327223627744989,0.33207536685416106,0.8131392832819099,0.8095288174419175,0.1957462460256627,0.3239213124434215,-0.002200714383484459,-1.6998622816485716,0.062097920762875014,0.14786647374467782,0.6568741302165493,0.9319233419910093,1.016204031596045,0.38677912573124823,-1.078574146358188,-1.4893311999626697,-0.21663382465466208,-0.1370271824910868,1.0453857207593515,0.9072341868698414,0.08256601001204683,-0.01894069307219043,-1.1919234053093575,-0.29808543492191386,-0.02432306768727388,0.03371259262168114,1.186697274481765,1.2876049407213663,0.656472436863921,-0.8764411940871825,-0.47619267659671993,-1.0777315879894056,-0.2776853357148435,0.5000478411119916:0
-0.5912624949956611,-0.7686149686708591,-1.1414948613756266,-1.3801779047075746,-1.0170046955904237,-0.07503360506045298,-0.907680803154987,0.6625059460432452,0.9602498531951786,0.5761281891262945,1.234228991465526,0.9343942272070253,-0.13629545496435014,-0.42628281256294653,-0.1073558811950201,-0.09721903499323968,-0.8831004678324776,0.03537230934477531,-1.1618662662676738,-0.29379649165835875,-1.0882879646346875,-0.42903983020620584,-0.23349681654744361,0.38299465701824487,1.0576928699810324,0.5976185499244931,1.2399943600789727,1.5798123999393674,0.8925123966770402,0.6940323570126452,0.7903443973316122,-0.12102241829647528,-0.2716696188667212,-0.6681587976385339,-1.250867649895973,-1.2644747463647015,-1.1990909983648312,-0.3164086915352192,0.04643640629820034,-0.15487150686565807,0.8547182942563953,0.7078498949764879,1.1085896328547884,0.48872466235940804,0.9630583228826688,1.367714550830999,0.6439271524093415,-0.08953667225020899,-0.8911064123956209,-0.8358940556222498,-1.3192473671630658,-1.0250194166101856,-0.209793679508683,-0.5251405570293716,-0.7312489307538518,0.33808453696108925,-0.020218216111332787,0.8041682499438898,0.8730506365157599,0.7780880341785863,0.24467552076675447,0.13477221975550235,0.8275679616596561,-0.19801404792456484,0.10101223919067637,-0.5947335116713335,-0.47155031903167755,-1.6073103779431137,-1.1253590392694126,-0.3847203489547809,0.17298297541582452,0.5600371294090978,1.1610029305922849,0.4770698702149936,0.5487021738835768,1.5324065815142767,1.5871977217176876,-0.05280056106127573,-0.621367823501308,-0.5092197352212068,-0.61068065082954,-1.0779336148936176,-0.7463123868037806,-0.4196745159707904,-0.5536857055249009,0.06387783611192244,-0.4688224276308711,-0.0038226883892312213,0.3336418040260285,0.15448979986035627,1.1359033356496906,0.8081855597499654,1.5106704864156653,0.10690652050036376,0.0977937126464927,-0.7241864626209672,-0.6916436041704603,-0.6007103773013569,-1.648293001877434,-1.4535148140798926,-0.46746721727764273,-0.6493523103743366,0.06911837263363288,0.28070057629129697,0.19766304460691686,0.7291598541386656,0.7579975823799807,1.02426309091104,0.9213089420274385,1.2183702664623517,0.11767509420643621,-0.7800150922557205,-0.43597207042894903,-0.8676433373912948,-1.1647003757109156,-1.0115488930520093,-1.3384010607433843,-0.7237478355333841,-0.5985754698205874,0.33592459523153967,0.1767829436902434,0.7269526863468566,0.4610188684812473,1.5448950240033943,0.5792402700924555,0.6107537479120917,0.7034208596045013,-0.9502906384101719:1
1.260017938555507,0.48163092986611045,0.0840488422357338,-0.43180497372518356,-1.2157688268242082,-1.0973834374856573,0.1399191055685089,1.1718692083279034,1.366254778096228,0.16930474367336001,-0.3982826903453747,-0.6763565070066018,-1.1096683716512519,-0.814564132173458,-0.8705721755545712,1.286384734120162,0.7217050922503714,0.8208968830195886,0.0478186138997824,-1.3493365263116361,-0.08386989405049528,-1.160998189688114,0.09717594660362902,-0.10632614529346107,1.0232881419729845,0.21118606392504502,-0.36295215047055884,-0.8723301813646072,-0.7738579140826545,-1.1859887922935524,0.6995174940509762,0.9564896742534719,1.2127799435736297,1.0446715943764806,0.3002891665471212,-0.9616769690635485,-1.651020159017023,-0.9758202781982027,0.5153859390496188,1.041518728221843,0.5598221980232693,0.7225207898350868,0.03835814642429425,-0.5170197579248198,-0.5792615082408797,-0.1653515203424032,-0.5266575493230423,1.0431370626928618,0.9879019571375686,1.2667636379276535,-0.5701966036478273,-0.8097433703584289,-0.7802033392511005,-0.15029452455156744,0.20801426948827562,0.7434545412402893,0.7514985576864346,-0.17172151713562678,-0.47469394400863707,-0.7063325249510449,-0.8446263957444629,-0.6337540622568744,0.825007268114716,1.099192473661252,0.2350610153059427,0.7718799150378329,-0.2349406964357917,-1.0214830448295842,-0.5631133926676898,-1.4378233054545155,-0.31256774088012407,0.8679342416482815,0.9191585017243115,0.5920732241228147,-0.1590909095644394,-0.5908636549286734,-0.9301831790910243,-0.07730871002871309,1.3443093668441046,1.0340921269167391,1.120356695982704,1.202939872334115,-0.5188460857215367,-1.368355186192966,-0.8465744872437967,-1.1909910737716434,0.31175205929090377,0.7588906814882366,1.1724588256662054,1.5803719132063128,0.20133522278206586,-1.1525420252076908,-0.2985062432749068,-0.44116681336404523,0.77801727385119,0.6416966787392695,0.26779964706829695,0.7840675701769567,-0.08108309113149872,-0.7201288807132478,-0.8841552488276541,-0.3465682037460097,0.6829870364643073,1.5461117161543751,1.1902286566851497,0.0965554529545617,-0.29642208176313767,-0.9374377696345664,-0.8837459416697483,-0.15635046600626823,0.29961563774812344,1.0737648639629096,1.426266818996098,0.027864334498180765,-0.20781319200066936,-0.5680251181766589,-0.6188622249009352,-0.6907126991643108,-0.04059222215023989,0.9122579152654662,0.5705258260802857,0.5231237435047692,-0.4759264641244335,-0.8851006058723452,-1.389415339901415,-0.9697549305266429,0.007479510036054099,0.8492293627263063:0
-1.633804225618074,-0.503511256928086,-0.9971121002450999,-2.0034271671724184,-1.0032767542538246,-0.9553639646440599,-0.2543582515999857,0.25769677428863386,0.5727307326077193,0.643492750902534,1.1512717938136874,0.9108862153709112,1.0354635345316936,-0.03861656081634934,0.481976475809438,-0.29775535891306504,-0.272489553178595,-1.0160680337800074,-0.9477351438294093,-0.8840671398568585,-0.947470356493068,-0.5606246569047698,-0.05759858606634455,-0.43795271394108626,-0.501507015611879,0.5586005069496225,1.309276654863157,0.8268251279266765,0.5189156498580842,1.0380991173197152,0.15924666305370153,0.08881738265463499,-0.21866212233567342,-0.9115940087615877,-0.4737254758357299,-1.208253852602644,-0.607256447330718,-0.4638269180949046,-0.43730498394617756,0.30254350267536684,-0.10997973753923307,1.026624219269529,1.495398998952162,1.3962448327194956,0.6103564051134508,1.1205428328327862,0.3161796089135776,-0.196632613822587,-0.7555569124541732,-0.9797525869188296,-0.9322122627800535,-0.048787994502177634,-1.2073111146198041,-0.22134504907854508,-0.17391016082074137,-0.28737318464683453,0.4711975063278102,0.30234926889662633,1.233761121704306,1.2012838214559116,0.8386172211767515,0.6487950078225714,-0.5505229580520735,0.15697918408701883,-0.1476881394804942,-0.592404895296635,-1.2220642493915161,-1.0075079646682195,-0.8321647797114201,-1.1538393094291406,-0.2753411136073099,-0.3808174456588522,0.5356053141772918,1.2955468702711674,0.21187635439898056,1.0308177971653167,0.8470107997995333,1.4221375943869554,0.9771600779091681,0.1557224751423149,-0.4603720138535552,-0.6503731117445191,-0.3262888002022092,-1.0733695738907894,-1.0732836066579454,-0.4737276716747595,-0.27185157612823574,0.6533788763642961,0.6921485608178717,0.9466261611854707,1.3941323511956767,0.8336981099139068,0.710150053000896,0.977904839094019,0.8789398149751474,-0.8630509294636489,-1.2322490735543496,-1.104175774693459,-0.7903651527612688,-2.336331543562391,-1.3580891678927005,-0.5685995063950655,-0.984731851805523,0.28239123135106203,0.1947977588856049,0.9952626469344226,0.8218951027895398,1.0741714919184449,0.6278594447729005,0.6716090492600703,0.5549611111442714,0.11174425930729126,-0.31498300261616075,-1.2878280440606868,-1.2141474940675538,-0.8461355180130533,-1.1518623468537013,-1.0345016976293806,-0.95737411047996,-0.2309264029245651,0.35308063897283765,0.423088510449019,1.4933814102015703,0.7468842546711322,0.6689247452516935,1.3504471851011313,0.6077318930841563,-0.24109953706488235:1
0.6583986921757126,1.6535402852701668,1.017113091352151,0.3082386030044362,-0.18836345391969622,-0.14110876179491594,-0.4390216064741767,-0.05552380558454051,0.05535457217654399,0.2534893602458742,0.9325245810640899,0.02519898427054701,-0.9787777237812512,-0.5969328946953744,-0.8389523125604226,-0.3631844779761422,0.39898913104100403,1.135124719478866,0.8250768897850801,0.5988219871896527,-0.29869829343536547,-0.8829403153232256,-0.8407388680466161,-0.10437925740542137,0.49075340969367515,0.9186491666664245,1.2199026431162823,0.11573533140913436,-1.0823745728924408,-0.9782520858322551,-0.4910600902336205,-0.2946192094171288,0.2022572887998172,0.5764515619819377,0.315538369786186,0.42246870448278684,-0.3949992958439478,-0.6251860847379438,-0.1959872012149032,-0.0795708445900763,0.5060787093785634,1.4674797730536204,0.22558355350065362,0.5227368476536097,-0.9665655607495327,-0.5688408556272622,-0.6692004237441931,-0.5189105603039553,0.5390009102518206,0.5184292474226089,0.7374407003089527,-0.4008652404085604,-0.10091260027910848,-1.041341035541547,-0.46750204923682137,-1.0352683673890488,0.42464110121065646,0.8455894164125994,2.0191409304822394,-0.12244782732878406,-0.2894176967280113,-1.1117938734316886,-0.9566565402163466,-0.013389462532007762,0.571641630752256,0.9416164624841397,0.7541597987858002,-0.10379786444557226,-0.9835936027756412,-0.4685966693593875,-1.171349773355942,-0.27862169624631794,-0.12049321176017236,0.9635437208323671,1.072595251285189,-0.15935878183908647,-0.47031967373383665,-0.9229285816550895,-0.7961678541304967,-0.017985746041175366,0.41376121791668785,0.9703259594911775,0.3996852857696911,0.3226773788573736,-1.0291735104732735,-1.0286058054383262,-0.7448249413285286,-0.6953946492607005,0.8070032863116328,1.6441485516977157,0.5935547776601031,0.43967907340067436,-0.5556833282336084,-1.2787007423640193,-0.8534010523110671,-0.014345296942845448,0.9031108836339246,1.0646621381208479,0.8654584192610529,0.7368751436844736,-1.0460449771720939,-1.0778665909513356,-0.9968746854122941,-0.42677055947970033,0.46537301265163095,0.5390012813567286,1.1972980342356934,-0.17572118287468697,-0.8952757123012829,-1.1730182353799843,-0.32514733005519614,-0.5306528630180916,0.17176478408545504,0.20629161950968233,-0.06849159096209068,0.23784838422325963,-0.7323983912940628,-1.2121720771832831,-0.21346271882763324,-1.391230258487652,0.6540224507611738,0.7870086612230679,0.6392440983780632,-0.22029615250602796,-0.833814442480526,-0.8927476613588284,-0.31909713036043486,-0.7471344319734836:0
0.4478170133409783,1.1195680733229754,0.49312011111940696,-0.42420602688262804,-0.2415939796497211,-0.8409347779729194,-1.3166185414201903,-0.93042123377341,-0.49096656979840747,-0.9243836712723785,-0.6838480628813832,-0.08082404256172535,0.6530938182139375,0.7913829225212325,1.093607637224785,1.3535977993529684,1.6598322889995663,0.6154889454855335,0.2669617072381098,0.24950361144094474,-0.26393344404022884,-0.8168915700543716,-1.0763692378362322,-0.47306161035649785,-0.7886528154660676,-0.7069647767880939,0.4676627978851299,0.14521878820330109,0.38969373241745403,1.3266413899231146,0.84136974250998,0.8905019110019647,0.9194833291018311,0.4704399927236881,-0.14024507985159784,0.6396163149115542,-0.44574694950677984,-0.2224748444330109,-0.6626618719616366,-1.8729748184254102,-0.83521128278183,0.2611955304851086,-0.5986603043022302,0.10023498246714811,-0.0803189925849449,0.9613761180068092,1.0736651216705995,0.8648753630331845,0.5986913384805119,-0.09736856570996066,0.7875534169041458,0.44766053998722544,-0.7391671827001792,-0.8224688545228436,-0.5918147388552933,-0.609467724430875,-1.3013917024389194,-1.219837579787627,-0.6553842709075861,-0.3035624761269006,0.32526216419726894,2.1177813698317354,1.1610474242508704,0.3316901641752553,0.8720163217310662,0.030065905314756947,0.3340080662140792,0.08117708927423914,-0.8664594550749474,-0.8632765641078148,-1.332235514284658,-0.013130281979437108,-1.205463988897015,-0.272845882205799,-0.48834496476134825,0.04326151865990034,0.26034964621191004,0.6975231357778691,0.27970038589624,0.8610635373784458,0.7493718578782502,1.0536558390457613,0.1381447391602552,-0.2664528973583379,-0.7898947590845562,-0.8148995656729094,-1.6329226333461726,-0.6313676159137742,-0.9029522544007885,-0.3657542832756512,-0.8669141983108875,0.17034488800509706,0.46324276109547596,1.0953349365030476,0.7432445511285617,0.9944609858238449,1.1578584424152416,0.7487611480772565,0.21873309267435898,0.288643112747546,0.024714317766639404,-0.683761444879111,-0.45250969300923005,-1.0387047610764721,-1.0257882630798028,-0.649925474690706,-0.07624827997279607,-0.0005146989684069042,0.24092987675169236,0.46000623187029055,0.9362937466265573,1.1148978295466438,0.9043889779768407,0.7653046138542057,0.9521927158358037,-0.16346754036178598,0.09553278711727903,-0.8976903713947118,-0.3236337558324316,-0.5382792838894723,-1.3285140596595038,-0.5235366480436747,-0.008682126498753662,0.14427178677199998,0.06952209386482594,-0.25808821291413386,1.4990061932980747,1.347287552615585:1
-0.05734785480449145,-1.1873407469331456,-0.4448731411752843,0.030303665590279,1.0071342006336341,0.8800697155956663,1.1708065412726536,-0.34327109032098263,-0.5869165118453823,-1.5949968485709087,-0.5744124925911407,0.19603760273078769,1.2327957074845293,1.2554075932942095,1.1593349780095723,0.04557037103165158,-0.6286420656686947,-0.522985873772549,-0.8757781340145935,0.21694683768713435,0.792156231046354,1.0241315101341224,0.47072544024437535,0.2654307835733958,-1.171250547871778,-1.1879652602240378,-0.5598727799127503,-0.04781634708554249,1.368996714266744,0.47664448868861653,0.37115987501007286,-0.020762697040779807,-0.9298775379181012,-0.4926333101394966,-0.2861778118323922,0.39798360783269854,0.6948763340001922,1.3430089794112126,0.17493559806058945,-0.1394442878972056,-1.0183891371912206,-1.2564111216488747,-0.8340941245028115,0.21156025691009217,0.7786476344324024,1.425792481638275,-0.019846876068884578,-0.29253489935529153,-1.5308769967360538,-0.796526285277285,-0.7682420914026342,0.5259217767689939,0.6556512351569896,0.9423450173345438,1.2454774012567227,0.2368590046237033,-0.9495715002756473,-0.3790449267523647,-1.113584453949295,-0.4534804827479033,0.5202710981251208,1.0718434903624912,0.37461330832542966,0.6965459122909892,-0.22311143923417287,-0.8160300381400892,-1.2990418027283739,0.14106449729026252,0.42678114085595253,0.7839162636173573,1.0128546821950377,0.6003085318529366,-1.1541867867080653,-1.227193705532747,-0.8232528477003898,-0.3283707895836177,1.3384576540674302,1.4118880134383982,0.9536191830801637,0.08097436418479621,-0.186460350009641,-0.11155646628041482,-0.6804290047798458,0.10004630305005907,1.0504361885928923,1.0311709824966868,0.8035212201238859,0.017337601486993363,-0.6633011160639259,-0.7724545522441078,-0.5625320780682928,0.18725647726744044,0.38921397331576907,1.1667627464220216,0.7909999439222272,0.17878073043844842,-0.4947753799800915,-1.1425316107515229,-0.8410788510233944,-0.1544737524402647,0.5085657840485752,1.2088374924617857,0.343069511599155,-0.2166929134266269,-1.3324601096570774,-1.2052161884963932,-0.027310633955930586,0.2552177863156483,1.1320166796594398,0.8600138380034769,0.7984137058885625,0.33783944406805416,-0.6175403422712713,-0.801235339067459,-0.7969557549987408,0.49383382204974274,0.1982264021185457,0.6955719419684094,0.5045555456157947,-0.19169149453358805,-0.30487910034580623,0.01883006220365213,-0.3251554721182163,0.17872302956786998,1.119517857646336,0.901999328714731,1.4845662175924912,-0.33906008009032695:0
1.2427605349844426,0.4523379667216266,0.6933471222257712,-0.67368784801621,-0.0031150638903136296,-1.5613371422306508,-0.4882190453894277,-1.063852102752977,-1.0452106803576529,-1.7902690920927533,-0.2940691942001913,-0.8018821163351844,0.007904574931583308,0.13523715089057808,1.4292909850693007,1.380964413613686,0.7828653353230308,0.7739925056063364,0.45241175681458456,0.213536490769627,-0.8333616326548716,-0.7816602816699629,-0.9780443249830243,-1.309794328807511,-1.0840042393774274,-1.1267413176787977,-0.24821132815214908,-0.14213168370674956,0.09376019367860777,1.026250053609668,1.0347525221478804,0.6900587058701823,1.6276712785774805,1.087019686380465,0.9563337348262092,-0.2049042380812637,0.14338807620562766,-0.3199104896347605,-1.0263848837784018,-0.2349117022320395,-1.109149724906828,-0.1477328006999732,-0.12532662894359992,-0.09335959759341977,-0.1713399090379023,0.5702248747111043,0.32291186660040316,0.7460867509976327,0.9618758769878398,0.6691253662732859,-0.5307491574602146,0.16245607384914135,-0.1470461809146849,-0.592939160068566,-0.2708487742648906,-0.321325117513963,-0.9714084086992508,-0.4329036021057225,-0.5049792335392371,-0.2134286425440896,0.08844730702273024,0.6361182527733676,0.585880028858168,0.9871458486813598,0.5780219644996718,1.3320244591483479,0.6744060829016824,0.14169034267126235,-1.472149436429484,-0.8024954102327718,-0.3321951754035891,-1.2959030801742715,-1.0214688959733087,-1.0743397608959544,-0.526890653050626,-0.26081759305767266,0.03570082270825986,0.3686998199751388,1.0508295421935587,1.3567806990975801,0.7850053188967693,0.6867979135804387,0.9486233684769375,0.4043533548472403,-0.6109034296846636,-0.06772158677794393,-0.9616122627116582,-1.1443180685512984,-0.8890631509175372,-1.1730719458265015,-0.07841257995391843,-0.32126095382477804,0.2988145613326311,0.19307322614314543,0.4428727269695069,0.7107765607622947,0.4983089628450288,1.0889146406208194,0.12376449594810823,0.49648140789714434,-0.42290981708906195,-0.406483937498194,-0.9390162407430522,-1.1487544094929492,-0.5199263238226232,-0.6033322349498239,-0.027814228005265562,-0.7163456602522404,0.13095034658640975,1.3297301744533998,1.204392039786182,0.9552797115203615,0.14212913418952322,0.39314836710824763,0.8037169231330893,-0.046634806948659915,-0.06435445287471361,-0.3806301831934734,-0.8628939684670659,-0.673370325382532,-1.22131422238797,-1.0651172640028235,-1.0141245661428575,0.6845642598920427,-0.1341601910562164,1.2180158113974273,0.5635236059149349,1.0742037170310148:1
0.3836170625947215,0.9587772961153654,1.1375725073045793,1.026632036145032,0.296562686690625,-0.24939861261903712,-0.9932964209234482,-0.7311778963636387,-0.30964704041542385,0.21012611419337585,1.028073347600848,0.8116389394003944,1.0980442244207707,-0.9339387512434071,-1.2476059039173013,-0.9015563348039093,-0.34173591835877226,0.6015999274008712,0.12890547109009443,0.9304026892943893,0.4361245115215444,-0.21739807155258783,-1.1454915201379654,-1.4985663855287297,-0.3204478166373733,1.0567035329286103,0.6660353996142603,0.564619942096848,0.26624499508118266,-0.1981413606630249,-0.2872888369352973,-1.0524614362420743,-0.30678825722044284,0.474350811477703,-0.11329752321133602,0.9992179439987889,0.43842699822625575,-0.016883255479070436,-1.1858607958359428,-1.5243652998941406,0.6214684204721905,-0.05544283346473783,1.1220634372208218,0.5051935094885108,-0.18379580812237956,-0.06156736356449638,-1.1256662152674992,-0.7046480276016371,0.2417714540704134,0.02737277489736223,1.1877891895677757,1.0196485550986194,0.4265776072036491,-0.0965723489723942,-0.4923352946399788,-0.8794021548218388,0.22433351756078107,0.1789536586249731,0.11659056809217438,0.923410402563158,0.0013972645886999868,-0.17430470315351115,-1.0426846070183857,-0.44565857296236194,0.21007974643381788,0.12156429278019415,1.0920381635034901,0.18021069997679529,0.06550061014791864,-0.6200641376626639,-0.5120542234913451,-0.7978059866269354,-0.6441649152793542,0.1129688191963028,1.3375745537707786,1.0808435833302599,0.5873951252893076,-1.0865113963437887,-1.2237559253594694,-1.185091155562914,0.06568711295581842,0.5197616479059793,0.47280272526594996,0.8637684555393835,0.32628221503279936,-0.040203292592932094,-0.5478307218332402,-0.6089819399394079,0.18658195656793986,0.11509655739546931,0.28517743316201793,0.7232279327220704,0.23027780146063548,-0.8412974175173336,-1.6129469845349527,-0.7720722389134161,-0.2501923225087246,0.7632576237892739,1.3480958453159775,1.6541054484641435,0.578120576687853,-0.5214273077800636,-0.7196190294466603,-1.0295262663977494,-0.490201702417687,-0.19810505322018102,0.8045832495309313,0.8100709771994348,0.5064445503181264,-0.6609497120979382,-1.3817201873521017,-0.4848440556873802,0.2307007927749391,0.26419421054532366,1.067232947274155,0.9754333893844287,-0.641110481198147,-0.17017313323932415,-1.0959764312390265,-0.495695387492171,0.09149469375205438,1.1532495859029366,1.2463309872962056,0.9671070942514307,0.9426018892972878,-0.3387243314623548,-0.2729147813754239,-0.5164997974032963:0
-0.6178721832085099,-0.9904428091134586,-0.8477698709060699,-0.2460209592719546,0.3848163904709737,0.28033433403573055,1.9703528103795405,1.4897368642203555,0.47331307559001956,0.31444333708346067,0.7337343013409199,0.24678081623252013,-0.6314142761173493,-0.2745049552726104,-0.3491125839561341,-1.2295482960586317,-0.9086757259643814,-1.5733719836740345,-0.3386273408111944,0.07605193759206424,-0.06516492810089303,0.4409874175533237,0.5860225479288795,0.9206706659838164,1.2213538298463513,0.45063413988527784,-0.08237622033493353,0.5123003959420349,0.08720985050016877,-0.6665891632346104,-1.7081069090873453,-0.6320699993949295,-0.8013232695305318,-0.38730749296460415,-1.1507647669511565,0.09309467261606849,0.42238072038160857,0.926731053495834,-0.22286456540480148,1.0020696372406124,0.6292866254891545,1.055123269196461,0.20134459665850463,0.24386500054219704,-0.5830280340990996,0.02673380765718214,-1.3483836002361205,-0.8315673091310999,-1.2621141289185167,-1.136477411628359,-0.510651445228649,-0.14945871423587165,0.46072689480713935,0.18245773257288683,1.042344175253474,0.710754923532267,1.3660230251377672,1.1421387659416085,0.13961661837148126,-0.4271956434550199,0.11183446721043394,-0.4164458286653332,-0.805468898041269,-1.5289197273905395,-0.980354629778062,-1.0203228945772813,-0.5971780473176802,0.1656993325866552,0.3651775243711108,1.4151663197434403,0.2747609432516387,0.1381244696305841,0.8906802326121883,-0.11058222024861575,-0.10056791758972683,0.4248751406105029,-0.7578841141980046,-0.49574545068980624,-1.4183613371537547,-0.9297207842543513,-0.6411882315759118,-1.1005705444828888,0.01868171484112091,-0.3236489754433513,0.22358290078738813,0.888515916626117,1.4947396181018744,1.1519492806302232,1.2648461483726772,0.7028125641647154,0.9262516239257006,0.1944546881561377,-0.45708943762160803,-0.8214859427120567,-0.8130813252139982,-1.3977343497756272,-1.1345139098824626,-0.7772540526668466,-0.9289001682506994,-0.030792336321478153,0.39480851753961255,-0.11756465050522302,0.3186940592219647,0.6771729526679887,1.1611463940502895,0.9559389279863338,0.8693370387655849,0.10863367700988263,-0.6937215882155804,-0.6104248373428791,-0.7062037172831589,-0.29311831830984003,-1.645560422617587,-1.167504872867996,-0.5304525868018899,-0.27195625497448017,0.7312725239257672,0.8789154500873879,1.1021442768921879,1.2653145490910997,0.7028238530851313,1.0449497709283033,0.7214152929705757,0.7078609518050603,-0.9177375179301807,-0.05549833715201169,-0.6183188199952411,-0.6071823586489677:1
1.3341832634464519,1.3132452216212611,0.05842811120089295,-1.042323141856301,-0.737702728051276,-0.5149623396408203,-0.5589212017870173,1.3338449801341363,0.7217287374005161,0.4784643834328677,-0.21004693852035547,-1.4222335793967207,-1.1526396546196982,-1.1063348178562205,-0.43556328202413563,1.0691975129083948,1.4300699239416597,0.11049082608804006,0.297993400296074,-0.105828900485748,-0.9631554276637774,-0.5469849598637433,-0.34016094008582554,0.11066939162127121,1.1589202576078639,0.9261398933882949,0.5808793214282233,-0.6353322818266706,-0.8467892207886802,-0.35711119443155875,-0.36717749989077586,0.8424676411643297,0.5341307837791192,0.9782034352263804,0.054132481394225405,-0.8224025027976078,-1.2460223317274255,-0.7905418946225519,-0.22379161136275444,0.3876432223757137,1.0868436540118223,0.5000152746774842,-0.5054396543026651,-0.12142761379065292,-1.0926532948128824,-0.38452186184333415,-0.33312928895756416,1.0652243232855911,0.2315543583134645,0.9937601560142009,-0.4634322945553974,-0.8339783388212898,-1.6944815288237922,-0.2677899147462959,-0.49147624040541793,1.0583909259555973,0.3357625681708012,0.3734905691650077,-0.5232714436314059,-1.0148223023262304,-0.6180334381740513,-0.6930132997908436,0.024029324991353174,1.04571074479502,0.7561816298388842,0.9174423535264788,-0.4203244376228048,-1.007856607714728,-0.6121031942202297,-0.6818134955527434,0.31515458122361983,0.8848391699431039,0.855675259507769,0.0745512081788593,-0.11156340881232243,-0.7536648672694561,-1.1952188134705193,-0.9554021830460409,-0.6116481480050372,-0.10859064336177238,1.8179629300606976,1.1302750499360328,-0.126983568643523,-1.0918876565544449,-0.6087926927934937,-1.3496856879475856,0.794531005713713,0.2460944360447178,0.9876451547404381,0.8594171928885073,0.7484230245176182,-0.366730254362926,-2.152767730852146,-0.4930335289285256,-1.0528227069415599,1.1816682781484873,0.7777477332618881,0.21096512824572328,-0.7364934707151091,-0.6800215045757234,-0.48562586017081744,-0.561091785061,-0.3383531495129819,0.5755923837653625,1.475118897914633,0.4940185448977563,-0.4180231616767262,-0.11664225540658468,-1.0999500326730003,-0.6878798685674407,-0.03754041814035738,0.5504221694624744,1.4730013739180423,1.1902823431516847,0.08563989222923125,-0.5164599052916754,-0.6378779912008167,-0.3698963575168091,0.7031918299096644,0.5653943926595376,0.6364195875713781,0.8138092278534181,-0.32484539351953845,-0.15654762718509485,-0.1322475855597961,0.014900141086961582,0.2775360723746771,1.2604553428140295:0
-0.1670068195778954,0.03398429779219192,0.5779768235194325,0.8199835667315424,0.918886097503737,1.0296942135190188,0.48471159911637285,0.7902262641688267,-0.059592205993013986,-0.5283540075364785,-0.7779691181218953,-0.7401017222760757,-0.8911735546542332,-0.7837765719115773,-0.5288078346231647,-0.624097677195165,-0.3211051279842962,-0.36955189917508546,1.0435596762871135,0.8843419946271939,0.607033209740162,0.9845256730407264,0.6441518423112156,0.543819200730286,0.768731508488283,0.2065696330486726,-0.5924380222077936,-0.9916326756494918,-0.658067891501855,-1.4139511117426358,-0.5277156280225015,-0.7035031898120117,0.04046473665519053,0.36978664752360935,0.2641391995021518,0.37216838806438113,0.6539573054177585,1.971272386642407,0.5282734297704947,0.4023972709661868,-0.40135932997536083,-0.43606142580147955,-0.738393873258158,-0.9906298337445141,-0.9090634016339277,-0.12925730896360632,-0.8651478678239245,-0.48366375308626025,0.08397462222286844,0.5054325217155902,0.70209492194289,1.4866034215865702,0.8683055016236061,0.5545992686013728,0.6348574098386436,0.7133126918947884,0.39982366042781026,-0.44362754567474283,-0.7703884270356153,-1.060245554340219,-0.9729862215220589,-0.5284457096644939,-0.8439536250425292,0.063564147792185,0.17897266371446222,-0.007024949699371341,0.422740231546479,1.1210895993877565,1.7506190106001474,0.9925384547732147,0.9731272129389941,1.0055535467933234,0.39845361076732816,-0.5014451644917042,-0.8365052551844446,-1.0400570048900875,-1.50074545381286,-0.8263714459472911,-0.4397345429292332,-0.7282850890136886,-0.5315866925333654,0.1448444973886182,0.7582110182452325,1.421715554901644,0.5719751150685394,0.5561907764479255,-0.011651562228999768,0.08683749891852222,0.22229901369918972,-0.18398632382592384,-1.3318855971658046,-0.7870212696995158,-1.2775025909950202,-1.1670031690290306,-1.1790540799313722,-0.2663058429777836,-0.11502774691977483,0.28790409635404995,0.18688430818836893,0.9103537173502576,1.462067775827132,1.108242386548175,0.7560122325397711,0.9568483219868122,-0.1387029900811707,0.024326363205369517,-0.13770216405301355,-1.010128145353264,-1.0491274841160767,-1.2815400787185356,-0.8586898093031713,-0.9395755001431775,-0.14951416265947648,-0.387713252546601,0.287330202612316,0.5917776138061477,1.3295439342871282,1.2917020853870422,0.5439538239405972,0.07617286629886288,-0.3745137313285914,-0.37506419505763094,-0.9791513813781477,-0.6556151821459062,-1.2830412743640365,-0.8159103053182605,-0.4067236792699089,0.06263369209262387:1
-0.4725165980090202,-1.5117328452747598,-0.5757103242665513,1.1583479819779756,1.5392946175220634,-0.24730993124215572,0.6269945187887535,-0.472522855390389,-0.5502255164159795,-0.6790703758144805,-0.5310522890887855,0.41994769133473137,1.768144404578248,0.47952901486039373,0.5216511092800828,0.21830890267450198,-0.35317552549338604,-0.75826875168971,-0.3910291776117599,0.8433840933082151,1.0813388739737726,0.4666481669332455,0.13943226642374534,-0.3866367520114736,-0.331796889529246,-0.4333397340055175,-0.49183036218303317,0.88386428428242,1.1451937473004028,0.6757142022729354,0.5940341905593443,-0.686881752181061,-1.2787273672156907,-1.226144689705556,-0.4390091877048975,-0.5795928679405424,0.7383426091636595,1.1284909353818418,0.0712186018841125,0.0032902069035098402,-1.272833167859992,-1.2624276094122635,-0.2260502399350634,0.44176609505872444,0.8690708014452929,0.937731020923649,-0.021035440874068945,-0.38650123154603055,0.01908879789993534,-0.6357057355339337,-0.29522667552136034,0.4030275041025816,0.10046563078738036,1.3701314381702554,0.9449907749201654,-0.725881735195389,-1.2782178134100255,-1.6155475857050114,-0.15180453071175715,0.4877154845081793,0.7812579408937752,0.8189054829439716,0.7436301001086953,-0.707541887229377,-0.570884257044633,-0.4376612842726136,0.1784125809458798,0.43082988387604787,0.8440413489153167,1.0188304689189263,0.39062313179507585,-0.5649425912158731,-1.1252059967910168,-1.2567453089341103,-0.30660268027832915,0.017420328215120684,0.5578820921891249,1.0882006355094231,0.18190979341239477,0.3806295337471006,-1.110514059873648,-0.5863598080283996,-0.875022543233827,0.771687746145718,1.2988243991459636,0.6109499150170197,0.6448922824295098,-1.0828772333297967,-0.5952853210550046,-1.534031649499488,0.23090023506589924,-0.2947402697387735,1.1529576924017864,1.2324803808230749,-0.1102566552036901,-0.3657179985217301,-0.2639584938091546,-1.653688184566902,-0.511038533737209,0.4822576010937549,1.1663643211875205,1.3909560090774191,-0.04991618748483123,-0.0690767996852295,-0.5446961723379402,-1.2905360133042945,-0.20974242316369418,-0.11229126182308308,0.23678075799436127,1.0870703819159115,1.1062434470470333,-0.8580321468400737,-0.4316795835183682,-0.2448521506419573,-0.4612373276032145,0.6773354750485411,1.4105093656760026,1.1798206664868693,0.8122578102526246,-0.5990247492732224,-1.5577554984293664,-0.8514891133193891,-0.0939855523664978,0.08250043919508915,1.1204505029058751,0.35545897182905073,0.003724973519418473,-1.4408064125738025:0
0.17623942324298758,0.33411474851770423,-0.7370497354108528,-0.22679504131774386,-1.9254833563018792,-1.115800692228301,-0.4963325341412379,0.22923517191423337,0.4075816973130877,-0.026528360115136485,1.2501778266263188,1.1234649819652658,0.43499547179472475,0.7847083937784314,0.6974615400745698,0.5631167130181554,-0.05408457487611943,-0.5755266581429214,-0.5781783525850615,-0.4561591276713843,-1.208485491429526,-0.5746085763215698,-0.4796685955936941,-0.6855720006648212,0.0026400316587252073,0.7202468607536666,1.1884849638182535,0.18497955773508978,1.860692807913097,1.2895173725126086,0.2787695291956528,0.4594774268631659,-0.616160165942293,-0.3794064800705833,-0.7242474507769904,-0.6272988097206805,-0.927916018625483,-1.5674051065080987,-1.0359610790985,-1.0088485874151947,-0.4373689548487885,0.7530577231785243,-0.07897048568190634,0.5921374440182599,0.6526931672464559,0.09776949059399798,0.9744632243570138,0.7079578443166791,-0.05959003791392288,-0.3117005871660641,-0.43401370688049656,-0.8862748711060194,-0.9174415729543828,-0.9955956770827096,-0.6159478489810242,0.06989793308285203,-0.447830843321358,0.6065701365063791,0.54840348278071,0.8438681818724107,0.2356670364646709,1.0573288343668277,0.11320733319798437,-0.18749485580351893,-0.009159713653750713,-0.06370619645344433,-0.2902905906429702,-0.4212112500470136,-1.9247034142243746,-0.6512670538501526,-0.051299882128691965,0.35789590409781286,0.07658932511137423,0.16610736611606822,1.483416383785543,1.1013833089334357,0.39007596326115324,0.7632308910201011,0.7983850068946541,1.133008677625474,-0.2335217579419269,-0.20876702898809485,-0.886425023185773,-1.3328362600291732,-0.9466654207962534,-0.46240603460601737,-0.5414361666219477,0.2856218962788542,-0.14649992374791804,0.3245248098320021,0.7570993775397774,1.743128601095853,1.3486342168458831,0.7372587613687915,0.4739228604849885,-0.20939704738670678,-0.1851441859987678,-0.35263131224816746,-0.6997050963792443,-1.774359067722464,-0.838165606195578,-0.5872911896593861,-0.4347902089096602,-0.20755079319187364,-0.39506328945754327,-0.30358170728445394,0.2681837863330134,1.2443640534721192,0.8296960852219543,0.5821836681156153,0.9254493359531977,0.730707366372723,0.11902177563977179,-0.6190218600287669,-0.4157238538082218,0.2713701807052088,-1.7376836532468873,-0.7006909681507126,-1.3240329451519792,-0.48890218626621895,-0.46928674648864355,0.22851857344926932,0.8255164390457939,1.5945468058057732,1.712271727405811,0.7287671102378942,0.9424309934406812,0.5414108382985174:1
0.7881796732320092,-0.3808394235718343,-0.9834936004505669,-1.2615396606712852,-0.6252446671778065,0.6375718291703447,1.095989141889277,0.7943433267019492,-0.28236130804314286,-0.1467916833368499,-1.8103352581308592,-0.9050705259408259,-0.31633558175628906,0.2873556012202838,0.1839328704777814,1.4251733022944524,0.17148894824560024,-0.4778021465848148,-0.571387016356253,-0.5573091335808056,-0.40575511838777634,-0.5399414368452835,0.25472160721247794,1.5864110731991818,0.5771753545028725,-0.06685657289811273,-0.987358114140373,-1.2764810957493475,-1.4214635598601055,0.7572054003555004,1.0873011023134207,0.46698372206531125,0.3321564130617335,0.004142403769661379,-0.21245503159597878,-1.045310917686982,-1.1478495051306168,-0.3381797991052332,0.17839216630845223,0.43674648297655083,0.6074024598743042,-0.1376931347702573,-1.1617843801944852,-0.9303077053874929,-1.2532761627801063,0.744012359348966,0.7861296938617989,0.891070642065352,0.9417095226761667,-0.6882212084684114,-0.5503405233971465,-0.48803971995682044,-1.0193239339907532,0.15849148040272482,1.0068145068123888,0.9474963420812673,0.8365901855385349,-0.2717285765913761,-1.8814560530978752,-1.6083582713153828,0.4151537791854021,-0.0852188694412773,0.4358401783910154,0.6451157979720954,0.32666567055513435,-0.7640497661686316,-0.10043484058680718,-1.5871497007230357,-0.23857349576509573,0.4957056380725476,1.1020836241847773,1.43824321475008,-0.051184479930119764,-0.2001417159947158,-0.879324524952137,-0.9464193198018307,-0.8606484765549584,0.5684454804172215,0.9582991422553571,1.5440348502849672,0.214721621787407,-0.24924105295194565,-0.2541337820031193,-0.34915012721984173,-0.7072893923664285,-0.23347185220345323,1.3223155665047441,2.114358838386388,0.7396539609494628,0.10368688989588065,-1.294089332870823,-1.0839565748606708,-0.8594835418947133,0.5977181866118523,0.7094026903680115,0.7907019100104127,0.09568281112554866,0.05053625207756454,-1.3339661675118655,-1.133924783321117,-0.9002721915468581,0.09984518180051774,0.41048354854823976,0.49011876453052355,0.4002745866172149,-0.734158174463243,-0.6519153843832002,-0.4667526937902996,-0.7169689851379535,0.3240240525942035,0.31557368859067536,0.7511186720497556,0.7013463820632897,0.013127423797734128,-1.7667664768812108,-0.38072538030873604,-0.6203784805632442,-0.08690390594133357,0.7062155354863495,1.1347145788467714,0.7072870119586023,-0.4767517605834157,-0.2587560662122177,-0.17079588705325222,-1.3696988362795603,0.49886500486385643,0.49373922686644633,1.2684194284351653:0
-0.28982773600356865,-0.06595674846703947,0.29432794238526916,0.9295257801642736,0.7903226136504544,1.4310705501114394,1.3651683598769686,0.7518610966118819,0.2615910601664404,0.6328219592848812,0.20847728741175836,0.2678846832009021,-0.9053422177721064,-0.9616975813530644,-0.9481263324897476,-1.6747884172651621,-0.319237920011663,-0.2757165915832813,0.32149847657160185,0.39547217772592125,1.2991681765287062,0.716703458787564,1.0421109510395157,1.0062216512154296,1.1504451290392967,0.3961757404835108,0.22806627537268434,-0.6977411413234813,-0.501105225095661,-0.6566229196777416,-0.9080715433297164,-0.4781181166340287,-0.4536280448906327,-0.11366816599210752,0.23613679154920408,0.27885684566510216,0.6855217386215947,1.0343175039477117,1.2805510244754374,1.0777617316044894,0.5008060172698735,1.053800956312542,-0.13699824094014162,-0.19216242504450687,-0.6900953206379339,-1.0432524945079547,-1.219489458033566,-0.5909205639577865,-1.1818778594506887,0.8029728964337113,0.04232973891205271,0.16592462011201142,0.9393147068364163,0.5478366268922057,1.4667703470880955,1.0239672770433113,1.1380786588375233,-0.18452839832091433,-0.12241360467594334,-0.3700364364676091,-0.8074072815817425,-0.5224776765927888,-1.4142739143914227,-1.2032439583680725,-0.27359185748788406,0.00755041490544156,-0.13172947956403705,0.2898572011595899,0.8539934355481051,0.4017493353872109,0.5235076161006823,0.298929581940407,1.3042721933851555,0.26001526233984396,0.022524611243241746,0.05982851092179087,-0.06040527436893406,-0.23744288682813952,-1.6401296482890517,-0.629590922168598,-0.9249076186018984,-0.3858960402617251,-0.4493043073482839,0.4178428788585755,0.6498632602678297,0.39056755760046147,1.5067632718410136,0.9570975549029654,1.308065124851589,1.14193295925079,-0.6476703471526071,0.23690104382569188,0.003865338613287861,-0.80578405521808,-1.7816426947685597,-1.121610403178877,-0.7134820637561174,0.11281394254773669,-0.4895031141062371,1.0361615559872774,0.39362621560638344,0.6110060363833779,0.8515032952554032,0.9477466075697558,0.3416465511587572,0.04990948795571154,0.38546289185334537,0.20296847391064887,-0.8182868551121143,-0.9183177889864613,-1.265664325539236,-1.4479165280072186,-0.866626378880766,-0.11745216820786125,-0.4637164743837046,1.3359420130080046,0.23669788808724346,1.047455726218319,1.1325784242515624,0.823210090515338,0.3394089770248925,0.24984389136270566,0.9912703466073933,-0.9161636970070128,-0.7731607231745274,-0.5706610918412367,-0.6932650667144639,-0.5599963678451763:1
0.3487914686265672,0.5574832808807733,-0.5640344391936007,-0.42506566013222,-0.7772737184757033,-0.555724587709324,-0.23795983299526174,0.739080560817728,0.7727369629019293,0.5572889917210446,-0.49786825120156947,-1.6811547575709977,-1.8054890426165695,-0.638904157042623,0.010527023352754405,1.2577033354791327,0.80554345628698,1.0514428194837675,-1.2721143557844647,-0.866425024538056,-0.3968536082265358,0.19352015773658532,0.16752935189983686,0.927142730784996,0.6799239627636415,0.8564787822832092,-0.29264972730717126,-0.7509930540874032,-1.1832782378436912,-0.26799470958866656,0.43261480634729904,0.8048809127160688,0.6808669855153793,0.384777524258307,-0.14888298104239717,-1.1326171885788798,-1.8773040407198378,0.20003839084759317,0.3673109820927377,0.5698478045892067,1.0161718702344296,-0.5050504548459256,0.057466460563790234,-0.9713949185548195,-0.3001924580182799,-0.8514621934331918,0.3075205065941629,0.6359934749630622,0.46356231836717987,0.9657017376475581,-0.676325221826678,-0.701908774793052,-1.617007725026077,-0.7463166680702469,0.4814869822003607,1.2174434455146554,0.5740446884675068,-0.27164029971188186,-0.6326202297332898,-0.19268915671276554,-0.8597001015307096,-0.7268277314372107,0.24915211925682446,1.7133870903053263,0.6677707987649109,0.35905625744224534,-0.028087336807876395,-1.4440278060382212,-0.1784239081112836,-0.3020489650041359,-0.5044089701133267,1.1438273001874366,1.1165479429408345,1.0977759047439573,-0.6534846816262982,-0.5053184443793516,-0.5048139749128585,-0.4098720814573071,0.8613012275538289,1.0497513776633958,0.8084548842454606,0.6009457092024233,-0.13501401158608442,-0.5484811179970681,-0.8236645328199655,-0.20551842485874905,-0.2799275444894248,1.4073014502520405,1.4266802141351678,0.46248767843678273,-0.13968452545217228,-0.5684476020692388,-1.2293970191951449,-0.7985846829061277,0.7762192918468427,1.0747928068272,0.6706733308452313,0.00012579107275911827,0.2811592733569595,-1.2066917386863802,-0.7832972360745216,-0.3080781223104113,0.3808863961970858,0.9048220495563271,0.7551094689297568,0.5728174647311357,0.011663356487379428,-0.6749106986540634,-2.1861182754572983,-1.452485310238421,1.0015982251886637,0.9073230049243229,1.3488161636932108,1.009654048801478,-0.4000027401051248,-1.9030271975311563,-0.9165376866942252,-0.45252192884217585,0.8507885053066617,1.4857780082310237,0.7665255038449126,0.9122114465183822,-0.20664505668593014,-1.6302229603887957,-0.9200197137917672,-1.1758454814297097,0.2403428782138301,1.0977935043680924:0
-0.9066543114402001,-0.4225320762856164,-0.2516215609156028,0.06314177046962495,0.3711898936215232,-0.04343119076920354,0.49663176915137497,0.6187489752087163,1.0401712828032976,0.46956234998446456,-0.032358773279179465,0.3594092730373961,-0.0809188388951827,-0.9299233055669941,-0.8590497871326186,-0.6566862603634738,-0.9941257060721076,-0.5313462626118102,-0.2998646726326906,0.4102577311673029,1.0067692625942004,0.20886643405931993,1.2467428287359303,1.5515554416688007,1.272719909805973,0.6448811343083126,0.40558159061135446,-0.11483977601741735,-0.5224336754538549,-0.7087123533756602,-1.3716046374975015,-0.607106308242152,-1.2281882820159544,0.00436754990131627,-0.8450022634242207,0.6730558995545606,-0.1421004730022007,0.7352710386186787,0.483893095228637,0.959606133540675,0.921008153012845,1.3347133369278006,-0.2332770864775509,-0.102858077349973,-0.7908658477669419,-0.7339550189443798,-1.1234111424200166,-1.2411141999821083,-1.035896185999059,-0.7517067803082887,-0.37355874203922235,0.12211988642529704,-0.22507018134091716,0.60030993975836,0.7217025985253036,0.705176242648643,1.1503669926058007,0.2176638660591409,0.9377538584788476,0.5160194662577411,-0.648250784004198,0.0051511053015731445,-0.7525618317504363,-0.8985608129235912,-0.8694885287634397,-0.6762348696781799,0.3258548657091493,0.013210997510625197,0.6765124408946762,1.1918379001890518,1.0988473590942454,1.7003885490100066,0.6819990693947263,0.556817810558061,0.25118672944644077,-0.26633011254953476,-0.5260049598283081,-1.138984743261861,-1.349102406725686,-0.4328499233509513,-1.4289805627042353,-0.37816101690153237,0.2227499906055178,-0.10943088165781517,0.818174808563884,0.4983572148471189,1.0276956036302396,0.6407214643256136,1.0450400784879221,0.500361943225419,0.3573139451404586,0.331696406937553,0.1826841269687745,-0.9642908895965662,-0.9543085023826362,-1.0595549501991641,-1.3481479393457414,-0.5460986851928268,-0.4098930962137623,-0.4807581908776721,0.3613788243940096,0.8240856197937598,0.6327823370704395,0.8817511932162624,0.7159286412033645,0.5225870603708583,0.5887195082514096,0.18258286811175967,-0.9502764832398504,-0.47636640894263554,-1.6901987436552226,-1.3049365192135425,-0.5829535097760504,0.2772696924014376,-0.22270238580683138,-0.07184661546807712,0.6587765276665574,0.6748923046319999,1.3977410703995363,0.7681321232789571,0.8372625562337602,0.7688903170524762,0.7305451623813785,0.3229696245837839,-0.32848591064506955,-1.0160148375995823,-1.1869692359180042,-0.6865607617700236:1
-0.7943131962039981,-0.8193432780461812,-0.12980329222536888,0.751260427073908,1.5193881236029383,-0.013541961798922197,-0.10697185291675325,-0.8037757865374233,-1.0391507993846312,-0.764443013454058,0.1413162605766349,0.28386660206001546,1.1791354506611675,1.0173793015307033,0.30463568914397465,-0.058587378978497084,-0.39478683660580505,-0.75680889276093,-0.18076699614640382,1.0112142520991612,1.0905748516363774,1.1186110819927007,0.2461821226954594,-0.32496435648279953,-1.1471312312956168,-1.0637458862198077,0.7340874382505209,0.7304952211233083,1.124902646091019,0.39799948500390275,-0.14371114746310953,-0.9946996943916415,-0.291505560131917,-0.37118383993511955,0.32180552444936505,1.288004576248169,1.4101468857368946,0.5514241760333342,-0.2893056379359278,-0.7489699467855294,-0.977355930590466,-0.7344321828888245,0.08193367077956451,0.8963135345824237,0.9376877910501492,0.49611490169021877,0.2193306732604804,-0.9661804635426814,-0.27874010418982087,-0.3812471678628586,-0.8390607770573372,0.48459467033547554,1.0730492222560448,-0.3053817516348333,0.20126953877170853,-0.5263609663097913,-1.164154087942801,-0.7488849505051186,-0.5039186603954792,0.20635876386491103,1.0538501249851704,0.7455754706464522,-0.5727355184606033,-0.9792226633637855,-1.7634655445427403,-0.24289332242372158,0.3485693578259064,0.34246855747707655,1.2330003405273469,0.45022328658951444,-0.27034289115299914,-1.2418005753143189,-0.8245920749934991,-0.38756834089490017,0.5886198097257157,0.10025440189084445,0.7850946094558732,1.0956888020342275,0.10036159594010594,-0.3505401950412252,-1.0702634343750255,-0.630168512257175,-0.17290474707732428,1.3111737618639054,1.563906760035274,1.0743169251972153,0.04950039728291985,-0.6376034954021217,-1.1905911911712477,-0.6620926142062988,-0.3164199794519953,0.8521043185242008,0.9576390085641743,0.8168377044879161,0.47314097515318754,0.2552644303985926,-1.3495755884751233,-0.8983884734938131,0.17841975892439188,0.9638206310708043,1.0083093305321518,0.6637618744199412,-0.4191254336643281,-1.059095059464413,-0.9008238434662077,-0.9203447053688482,-0.2893235023942707,0.4612002945089162,1.356836981909679,-0.052217390408486164,0.2184146663356848,-0.9695261372772497,-0.8714735581284213,-0.6983278005656113,-0.36826318494710947,-0.1745453704868718,0.5593223690025367,0.6729920098247157,-0.14018409907982965,-1.1973938633832866,-0.4958772354431713,-1.526377394049494,-0.33485701914204685,-0.01631931955772281,0.7143274794224033,0.5123771249108255,-0.21704722805568885,-1.110556590792879:0
0.9628882170545643,0.6550160816101107,0.4131351865203873,0.5002372656423298,0.1577113196942549,-1.4824908842523778,-0.578084622881417,-1.1339140408132753,-1.2320866532253603,-1.214468491134838,-0.657891567478454,-0.9059864772547048,0.2625785112489533,0.21848793125597132,0.49458355812405824,1.0334708403745578,0.5994057795476343,1.0789633380985586,0.39966897373738025,0.16859362544351086,0.3097363716765717,-0.5932640101429709,-0.379323097186494,-0.8730000115215067,-1.603811271990148,0.04780276822932372,-0.5913519576511048,-1.2971544568571514,0.15144333645408736,0.18019257998829613,0.9188507886603117,0.8159800750492636,1.1925782125359694,0.7732169113883998,0.59059659261092,0.5440741941489282,0.024042898999709128,-0.29403065314252935,-0.5728846035794984,-0.5369258564551155,-0.4489165221189284,-1.1713007091677983,-0.6034137411243881,-0.3173672609878001,-0.13761324324992164,0.14267155367919923,0.6530065714453563,1.0117549547301576,1.0716341506776117,1.1955829950483636,0.8705837449227564,0.047213810093584496,0.7454905584809832,-0.1753382847681669,-1.7624596983197813,-0.6023140382358663,-0.8347199785403391,-1.349356693576335,-0.9346349866206671,-1.1545880589422584,-1.15238481330289,-0.016419062131912077,0.6676617770930346,1.2885599757552337,-0.29292247297488094,0.9362786151838157,0.8428954289465569,0.7333616467286037,0.1723876669487706,-0.5390824632392164,0.14694240670190706,-0.8839562084567699,-1.4837499921356339,-1.9035097776676975,-1.245969349742136,-0.02855834863752138,0.12410444208961519,0.6007692385255143,0.3884139474133472,1.5908291678680948,0.5540018212115148,0.8278022739375374,0.04012500405351882,0.07264580355269107,0.18560243495787646,-0.4921722588802867,-0.18083358848445624,-1.4049431107057324,-0.7187224304924489,-0.8015944595977487,-0.5162856760063019,-0.09625025253068381,-0.8988970534243144,1.2448993229870413,0.3185395140742113,0.8410951763904408,1.6406938826443205,0.825955735084673,0.21822863267513426,0.1324356820385596,0.10921755756112723,-0.7456197429103111,-0.5103654145941746,-1.7557808193817377,-0.945747791341102,-1.4553728413993177,-0.25667366829748745,-0.3429835819499697,0.6507481645923887,1.1351142465014508,0.8223119931961005,1.0497278700774977,1.2088447031578713,1.0491074678267636,0.5765490840274117,0.5881494028024011,0.530756130831818,-0.07046772310847371,-1.0133367165127685,-0.8601421000780197,-1.557904706324742,-1.261029184430873,-0.4261626105195015,-0.35933363695072723,0.13580934399617073,-0.16476951815519825,0.3941589951902022,-0.02094256994429755:1
0.12059022482118668,-0.11002516044294941,-0.7767438108197943,-1.219697002280551,-0.5684327382707958,0.9049977882979737,0.48014810479345593,0.32885812555611005,0.5963196378988241,-0.7989459735167195,-0.8203112055538235,-0.4288739116592627,0.8538409032948245,1.0165986390852384,1.0985728809275992,1.183311640064952,-0.20781985978590709,0.047715223365941584,-1.5216566348495526,-1.0224447866355606,0.23961597334421697,0.34017027829516794,0.7527241800521587,0.3831451524284564,-0.12546577677500598,-0.49281408029176865,-0.2792471496715997,-1.30053028361441,0.30013839571312545,0.5379176073454164,1.5115317469926706,0.5013953789327691,0.01671405459192466,-0.8846631197149675,-1.0761046665671539,-0.2724271282724947,0.24304557235449714,0.7047589328217072,0.8068200907672436,0.8280146094877533,-0.024013857397050718,-1.446559843534557,-1.0410100836066067,-0.3652579663061618,0.02161056105655327,0.5474313697280496,0.8274060071745564,0.2055526345586,-0.3571317137898622,-0.43494972643459484,-1.1886996238369856,-0.19439774708120672,0.5426963588178205,1.0934038079045514,0.8630793096125612,0.6045546766118772,-0.3130661133030005,-0.48021263996574165,-0.699488063224124,-0.9188909298853546,0.2646337759216027,1.461948380251793,0.571271322404422,0.3887702727150728,-0.028310184008776426,-1.200254983588256,-1.0863788224973807,-0.515353204891485,-0.1808972596185112,0.6648097567925337,1.3468235581172947,1.1906874761343318,0.03523780932060191,-0.5937321516902364,-1.5169221002717967,-0.646240609343352,-0.06949337686531976,-0.22284699619513115,0.6196992866313566,0.13571284388906635,-0.5062690976591936,-0.33594068098663454,-0.885737548033291,-1.0710681475417545,0.026212280968665957,1.1184418581286664,0.8886025210548546,1.0236554232356032,-0.49092499103797593,-1.0453325722859854,-1.0767344838699369,-0.9351201283162405,0.7790143071987032,0.5224008282268342,0.48174499135330406,0.8700207547839365,0.35403272292433186,-0.40048576202828745,-0.5600331984226301,-0.732097240289161,0.614149462893581,1.3080774178961398,0.5852136476695258,1.1810772591658343,0.6976650550608017,-0.8492434323463018,-0.5424333220254336,-0.8715409967007071,-0.22847346441962196,0.4559799620490389,0.1836336991746168,0.857919007196637,-0.18216550900141565,-1.1441018126731928,-0.4369164807457513,-0.2131010922828127,-0.4409512476398645,0.8822322244089893,0.5393952947147725,0.84401890012407,0.07141198602564985,-0.14484203872541612,-1.265317041058974,-0.4420806299658476,0.026445943170231096,1.2499279322601744,1.3105868625900359,0.9012623244428728:0
-0.09787584025310644,-0.35693466916638095,-0.6181322918458675,-0.08084599632209988,-0.9594564176557744,-0.6585920353709828,-1.4872487593552677,-0.11460222535137798,0.05965958723421558,0.7083949492871995,1.2612968717184083,0.3587744466104511,1.3548848242643747,1.1068868100536045,0.8238730143630602,-0.7478591487623663,-0.07855301979136448,-0.15278677193788354,-0.8716677861435722,-0.24193427813133228,-0.9997596955829545,-0.9637001726150942,-0.19426086927122277,-0.3574372891518337,0.6303431521746365,0.7032765633644555,1.0648957980264708,0.28670798689255195,0.15791064215242856,0.38363465814689146,0.6240671080401643,0.360588078239156,0.16909915874154066,-0.21771582546699053,-0.636180637527399,-0.2347110360484872,-0.8149708562258993,-0.9918040570768787,-0.7112169917053711,-0.06012347240058594,0.274232795162754,1.0243592526819876,0.587717402445951,1.4058803195705245,0.8545455578236256,0.2937992257431784,0.09062558031149626,0.16634899633032565,0.1953850795812099,-0.347442299481288,0.02837487763577584,-1.2469273340525675,-0.5462789933021699,-1.1313863459601523,-0.3174514466940641,0.19660978521076977,0.42588662749263817,0.3519368005552908,0.918418693577954,0.6277441140932516,0.9337335285573349,0.9935387494855561,0.03198677364511704,0.4789676275071167,-0.6403105062062644,-0.6703929396776512,-0.6470752954995683,-1.4382899490168977,-1.1317277977413709,-0.10733626171952348,-0.8428816446650848,0.10998013877984911,-0.5394577493213197,0.10319789780057453,0.9667885620439199,0.6480577821227591,0.7005123516650227,0.38083815189221076,0.7558894556337562,0.15671164572585694,-0.09114219682178828,-0.04156954716221173,-1.2686725738223554,-1.206957583372874,-1.3159872009458744,-1.05908222565673,-0.7093821944622309,-0.5326986845445059,-0.758524363277841,0.7068048662280996,1.4195881280809175,0.35184954077482744,1.1696730537147626,0.5598476666101513,0.2621913837744646,-0.3663978522657111,-0.3261306836116097,-1.3446203699009005,-1.341889212838464,-0.9082328188809462,-0.8194448185835941,-1.0465120245319879,-0.9523506865091829,0.5694470939787257,0.39279236250105287,0.6328753256683064,1.1185471866741576,1.0467957035104738,1.1112660128509393,0.3354158596694259,0.3103299320027053,0.32208590342516685,-0.22374978673675255,-0.45405300823906447,-0.6526737315942879,-0.7510993358125867,-1.0506565208487821,-1.5092314149813606,-0.4779609143777634,-0.20527450754843438,0.2126521615369097,0.9310678197311599,0.8510864180571194,0.7340408482151399,0.26351376488632816,2.1151793838505064,0.8009724554598407,0.7230626323328736:1
