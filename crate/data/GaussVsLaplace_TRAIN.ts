@problemName GaussVsLaplace
@univariate true
@classLabel true 0 1
@data
-0.7006723200338936,-1.1422489814361734,-0.42332088497704723,0.552265637426409,-0.5675950284253654,-0.8359143947659826,0.7482326492446189,0.13157542554880805,0.2601916852880488,1.808688202058164,1.1695652566058257,-0.2634307870889338,-1.167071485570996,-0.29827520693292603,-0.10050499509086108,1.4797383518909424,0.22325000522574026,-0.2501003990351554,-0.04914234181497352,1.1116211869301826,1.175361888538002,0.1706644228647961,0.2171559312076298,0.2544218886014916,-0.9859226835251059,1.2880130285687623,1.9453369932337643,-0.014533714381599378,0.4646143560001543,0.1826149129016583,0.22137437150727962,0.44689770790182404,0.28880426224643924,2.02226088484694,2.518815636724109,-0.5887529548826961,-1.1068677188069433,-0.6411679289584875,-0.47194944947159,0.04470315465554839,-0.48578233912919405,-1.2336467822048085,-1.2099655423295193,0.7662286012667712,0.3999781054548753,-1.005782029818952,0.8602304351372098,0.5764858790517079,0.9876633187816574,-0.022184967551809827,0.7732496057496637,-2.0707099534711637,-0.8600489115082127,1.531743283461782,-0.28109887412232576,1.1663119969320686,1.5276191950043196,0.7136711784529971,-0.3335540813846477,0.5962311968241699,0.8308778060779856,0.0074930835385458175,-0.10129812542077542,-1.4366782629028338,-0.19572555511725998,-0.1400237893786581,1.394043498603593,-1.3571771174982423,-0.5508435446786145,0.3947013919992648,0.9608179830083173,0.69096618862608,1.9586648361784198,0.9566543930451372,2.0249565578882076,-0.6124809411221397,-1.1054296924503688,1.008198729066268,-0.08714403032135296,-0.6921870382415929,-0.40724889015780685,0.21395065765639978,-0.17874221142020302,-1.1326126528483464,0.6718896878413877,-2.1416865268712524,1.2929634650108512,3.075662171821391,0.7700683807564142,-0.16885957923892486,1.044387482756176,-0.6395765681325027,-1.1787417766042199,-0.4926969616217297,-3.0461222175380858,0.05582147450059141,1.847568166254394,-0.6860916420374527,-0.3668880219732798,-0.5180749038358718,-0.837560592076975,1.1653543688195676,0.6896702084976705,-0.4298657808494366,-0.8899044472896813,0.18662732838733845,-1.3634135645993388,-1.2886337945396609,-0.6738665926029115,0.6055134598462223,-0.4192056112931824,0.6807459957166557,0.05315208373806947,1.717771357763438,0.19557238859089715,1.2903730242055447,-0.25733658232002427,-1.0468837783876992,-0.014179037427779323,1.6285953907925572,-0.2648406928427103,1.840149074936199,-0.3568719097523872,1.4664473182684423,0.21781778849380695,-1.2821865506531434,-0.5491491820519461,-0.4945622789272001:0
-0.2600600494083295,2.9642976955832423,0.8339842113621391,1.1539284790006787,1.2266384594275865,0.6053569214229086,-0.37177486312934527,1.5135754058487028,-1.616019201845773,-0.19930830806177266,0.8674007517835426,-0.04608156025678816,0.9583996273706428,-0.23592431389930366,-0.7020381209112471,-0.8910803271578532,0.0328112749571294,2.650818775720408,0.3270563125311173,-0.4391781199626846,-1.1958486025889417,-0.5338338074735551,-0.16528932996612647,-1.9484237334256727,0.13247229507284944,1.844746402957837,0.20609623823723866,0.1462461345572596,2.1611650272086655,-0.484494133006213,-0.0037541902718935373,0.3778863033316857,0.3943868391903514,0.10262180940641442,-0.4279470860947366,1.0291611351175716,-0.5628729910296064,0.9738729534236111,-0.21894193166003895,0.19586412020981844,-0.9426837272352313,0.5185140591240315,0.3117390677863343,-0.25723236332305854,1.6926733283244357,-1.1527114148786224,-2.1812499014606184,1.027218671969723,0.9011942790617461,0.3518981985000123,-0.5399938107787889,-0.5072655227535025,-0.9525044960536708,0.35308868622955036,1.8737232920411704,-0.2643209605895806,0.11934922245278749,-0.35577849372855996,-1.7288011191462824,-0.41137520979398806,-0.791451468489845,0.03576870136289898,-0.05994398514677435,-0.16499972575569152,-0.9730858107675144,-2.403454173106836,-0.009088297411449404,-0.4065499579738541,-0.7651783887806974,-0.9284871682872091,1.1301327352110488,-0.42039980407811584,0.432578347207911,-0.3767712825724323,-0.8244574601101965,0.09563530215041252,0.13026389059031784,0.14847893124779551,-1.1499578823478946,-2.123458643877859,0.3667561124718108,0.6577840895547223,1.007036016262126,-0.016607852521413,-0.30901168511463245,-0.018969667964071724,-0.705826115017158,-0.8746462448060146,-0.7298610925720808,-1.4258975967239023,-1.1353379925540452,-0.8285494007866958,-1.2234686526332441,0.8512886067606416,1.001285554861349,0.47742264679568014,0.15289918337125846,0.081691554803888,1.6841865555115365,-0.948844371526925,-0.5710918488712636,-0.9776819523890868,-0.10925542336444193,-0.09034760165007194,-0.10078676645514993,-0.2236441712490317,1.192051082904195,-0.06660610333598022,0.0765197809942916,0.6951049921081508,0.0429480940701765,0.19037808554644434,-0.6048740753702901,-1.6297998136903953,-0.24609351929545378,0.16949152602477743,-1.4834402828857092,0.029176164939617544,0.19995877339473034,-0.18325849857900464,-1.0801343581138196,0.33573105959351707,-1.0560148088806296,0.887900345495652,0.34871735870953025,0.28454608883629057,-0.8550024746061371,-0.06135889248556796:1
-1.1903120494576698,1.6547316190927217,1.6751260372613537,-0.03198203430367916,-0.9156795780658913,0.2705244069236039,-0.1485967629150115,1.0442131485280135,0.011315334831435297,-0.9520074253507003,-0.6618914269758517,1.6808233233649235,0.6079193424544488,-0.860012248811858,1.5296848210371539,1.1955444177471766,0.25678917949012975,0.8022857411631815,0.22928885983729583,-0.43439343079653947,1.4907285221940083,-0.19205097283747863,-0.2799650747973171,-2.5327129308582426,0.7153644034495471,-0.25755891781215323,-1.1012495138348977,1.1766767604063593,1.771857023670584,2.233815294885607,-0.8143311711788106,0.16816924735907002,0.4003012089074786,-0.427426790785453,1.1276262762453788,-0.7379255576892114,0.9480107013776043,-0.9411216942759855,-1.0379228936931608,0.3988664526106872,0.7985822002004892,-0.12588006002722496,-0.024887983607472804,-0.769046119805675,-1.2744349286725467,-1.1838972966131065,-0.2101653607208022,0.7037946235805916,-1.7233736496818215,0.6723040926748456,-0.16640246589607344,-0.7748617090692496,-0.19557481602550794,0.7016104999813534,2.3013432168835535,-0.43133834807990734,-0.589547461804231,-0.2378483446099136,1.7455019700650942,0.5056332980696079,0.03732954811295406,0.21608709610196186,-1.0166036953086555,0.12711094446444915,0.40568568496687896,0.4160950826599826,0.8577742526785497,-0.027846931736568537,-0.11501889842120708,1.8743536933084979,-0.10239347368106683,1.4405501823778,-0.004991294886369215,-0.027918082655887966,-1.7166986390966281,-0.6760298964196827,-1.1215895576014678,0.6374129669711659,-0.381321612538454,-0.25485246820058555,0.6151748054539217,0.2401346840697754,-0.44360474106156383,-0.651792880911242,-0.02066621194054788,1.5370842520526224,0.7909699727185109,-0.4246495717837219,-0.048074819709647366,1.4960515430097583,2.269409088409094,0.7864654987478483,0.8959671035462881,0.3406777554336399,-0.7459338914272224,-0.17193762831680104,0.9930936248549495,0.831519099923757,-1.7319414549544392,1.6581172453815136,-0.3038012351706357,1.4495799316101905,0.10215813042211477,-1.8112516215913697,-0.19291067042455498,0.6101040988657618,1.4116624388606633,-1.0210492139201008,-0.49412621651476457,-0.4996310546273737,1.0960772580794154,1.225063291385527,-2.091215435482213,-1.5329219006917623,0.0850688893357635,-0.8239381766500673,0.927793501849018,0.44440224603144135,0.24291180509839222,1.2716104872135638,-1.0822833412518147,0.0720080398861137,-0.3010947588685006,-0.4841442476344878,-2.2942953182175607,0.8081022988427291,-0.8620210249777414,-0.07095636916742208:0
0.6272793932699412,-0.43473196861789576,-0.48687379192495955,0.9343761384124282,0.14686513254242858,1.1909065429271697,0.5898407938334177,-0.47618524917266514,4.240165792372883,0.7092577114334639,1.0658085538708635,-0.9187849458397419,0.055734453090846965,-0.42363149951115714,-1.0345804756547616,0.7606246074386552,-0.07589614865161763,-0.23507744882236953,1.1231912364553764,-0.049559586225991756,-0.2450773520910259,0.30945407664339264,-0.08929801602879661,-0.3580993716470413,1.2358466464893227,-0.14430698576138612,-0.8673485658104461,-3.2599734125303583,-0.27789223329820734,-0.6762645201915058,-0.16455562388521316,0.2884428336701301,-1.7380461039319595,1.947099663042671,0.901859538287753,-0.04205133336010546,-0.11627610302924035,0.028651686122474963,0.22173442640161073,-0.8513196660349281,-0.2677106019922012,-2.296074310297383,-1.0898886648709438,-1.4355607580325678,0.46765101215169247,-0.12884133610243473,-0.08886518773534416,-0.1730507556526402,0.2841115282467692,0.23670364901868118,-0.9198449788546569,2.3077622102061177,1.122884708905721,-0.41823873933978695,-1.2013252894103617,0.2556592825685474,-0.07316762811877188,-0.425354617734544,-0.7812382587258084,-0.030101536559540436,0.6217974739891773,0.6842250144812551,-0.5772385771384173,-0.7924706628722856,0.685419215485299,-0.37093547004789024,0.7950162861973464,0.6695945089493532,-0.29021824406565905,-0.8746676878463701,-0.4309091566557607,0.237609823191959,1.3418245854012703,0.28242863566624965,-0.10844237923240428,-0.43207788559486027,0.10402423288121454,0.0937190972939047,-2.661613806937502,0.8028851349142994,-0.13137833334282323,-0.32442942609587966,-0.9171647865218653,-0.8622319292841466,0.24770796493320604,0.05405842166167497,-0.45391937777144736,-1.0461446151896894,-0.47033527526941615,0.639198494870869,-0.46562918288613864,0.8662289180519492,-0.7945177465515785,-0.8121316997341217,-0.11258214243360812,-0.03691367612485764,0.4610630171090389,1.0368783570892808,0.17556822897526161,0.4646519354347744,-0.5248443838600158,-0.564368425517759,-0.7915963708998682,0.6032502085718434,0.6977746322893437,0.29281510886935863,-0.7533612505712791,-0.16644823797791977,-1.6710474917134797,-0.746664193944394,3.0098265107827973,-0.7453315947905641,-0.3208519642803654,0.1928956786916402,0.23839552018975166,0.019743482842490664,-0.24129850419493887,-0.5215488560903522,-0.2877748444908377,-0.7161948120082446,-0.1534790750592386,-1.295416920645722,-0.05359570161592477,-0.8964816404934166,-0.3597062347779181,0.12432406498284938,0.38002498636328147,0.09725639286864171:1
-1.3376008870813014,-0.5054992088381385,-1.2531760861114893,0.10359980176564514,-0.03728535064167577,-0.25619675280402826,0.27582825210055817,0.15034255235478858,1.361299666442899,-0.0920719897264104,-0.9437275116496886,0.8106179814250994,0.20802880202324386,0.8142274614405811,-0.5908707374809793,0.8927286975538414,1.1864271230714358,-0.8517109912858809,0.6340690942540016,0.9257139639875838,-1.3680291330653287,0.17679742290554032,-1.7422353344749915,0.524791277136823,-0.4831543991792311,1.5264921400234117,-0.20393393940632443,0.2695518561880112,0.4410908935459743,0.862899015478969,-0.8082981151186185,-0.7465189069212597,-0.6896003278175722,-0.5554653727319511,-0.8213459054731939,0.742695525642337,0.5357016771496708,-2.4038667227718022,-0.1446567613728257,-0.9124471934771881,0.6168737978505767,0.1246990547426654,0.9092388506590418,-0.2889332988788712,1.4337527560222654,0.0003798245546523563,1.9484547391028404,-0.5110425771654229,-0.17038398739274335,-0.5542476258150103,-0.04963786755186157,-0.3641570046933716,0.30648540593129375,-0.3374993563146357,-0.9610881731242128,-0.4230526859531993,-0.19533298607771094,-0.4905339902682285,1.1533609587833227,-0.919375225917125,0.7436705454055268,0.3264566468199185,1.1524662691542824,-0.360541938347374,-0.12646013669427575,1.234243118420269,0.6949473908537399,0.08675143262442427,0.27344300947165606,1.364230363366052,-0.9374237302241193,-0.1257511114315133,0.14834123814791159,0.9384062311189993,-1.4063043549089933,2.2844376171171015,-0.44025264464063435,-1.187754023522029,-0.01623691715539394,0.9737391437259126,1.5290305853398969,-0.7372295558325426,0.8837760567862942,-0.8284795080791909,0.10594947021481596,-0.8828813102198807,0.16202044629063814,-0.1269398774563725,0.7069795766921856,1.4959760766119232,-0.4024161655049278,-0.9772478648514867,0.00950939181462862,1.0271107996696167,-1.243694249824354,-0.9727404775505867,-1.2996931425273486,0.5804140553758204,-0.6965150099885371,1.6129862983879517,-1.0269770329526504,-0.8788598276288712,2.499720195174422,-1.027445941799981,-0.31036074302189937,-0.14954062573614002,0.628992385755603,-1.1197843208678,1.78734851314891,-0.8496920413988474,1.1780825988997818,1.1098360609600013,1.1531964698088633,2.2584005992735037,1.3597236868877884,-0.24931612060608757,-1.7884062205050075,1.9993190604722215,2.0971289656967356,0.8757910346574131,0.48616137848068897,-0.6265208430540006,1.525745320956853,-0.8552994560669671,-0.7834172136453542,0.22097574427332015,1.1643950303810509,-1.2314516090167056:0
-1.8635620120165202,0.318406567123504,1.256027074377262,0.2405820509182127,1.7148407214210952,1.2561329398212286,-1.4059360625198247,0.573997052637799,0.5423861357484296,0.39177415894897777,1.338205772084949,1.1613397668887018,-0.07070485494566496,-1.0853558559617316,-0.15592244193124255,0.9801267828432791,-0.511748621681508,-0.007281497576187642,0.938705088472806,-0.051017307677499624,1.922220706721566,-1.2987855963438895,-1.918597090325436,-1.7729169244503082,-2.02764647285127,1.3919291867268724,-0.8253633887912459,1.1361239626018997,-0.5217011818219484,0.05025014914698145,1.2457401430466912,0.3160306807704706,0.23156828942948166,1.2436621732816773,0.32014166846556835,0.04452369806231024,0.08865731645179854,-0.16322442289628528,-0.21616129750044732,-0.8257937215461041,-0.15152827606427693,0.3582174587354946,1.3657484266979603,0.3810930553292011,-0.4431034658987936,-0.6629533551448268,0.36201518822359,-0.0044654218500990665,2.021842444447061,-0.09627525991671639,-2.3255426293008745,0.7448804521298835,-0.30109876791633927,-1.4666068581759881,-0.790106460287638,1.820753528770641,-0.09622774047674233,-0.1548940597845506,-1.3140210097539131,0.09715277412211795,-0.22630277502501472,-0.7678875297619189,0.72026902129463,0.020819459818814834,-3.603626719049847,0.37243812158723116,-0.1567476174975332,0.12121601445485691,0.17872063441125155,0.11565952999213225,-0.4186195579678795,0.42856697997630677,0.5310156715863114,-2.5434585275789665,0.17560873980153688,-0.3243862284147552,0.007171952424252879,-0.5428999820580482,-0.4230356104375937,-0.3180426079695847,0.0036863561774975353,-0.3781748080755992,2.0277827068738175,1.096360700076961,0.7694827570540561,-0.8404178205807196,0.5210730509325392,-1.744477197042523,1.8661562692483,0.4145143488101473,0.70648199505625,0.09377076886373809,0.673081572537326,-2.346515736234674,0.7182272019860454,0.13825710173892086,0.0956815127277175,-0.4315009506666282,0.0810734129613828,0.16930460410703813,0.7665815329896449,0.8819849349104149,-0.010573637954093126,0.12849644140914399,1.050142048277022,-0.3327929548878451,-0.20011862612470954,0.8557287536615316,-0.41032525199092773,0.3181846915455279,0.9729799298491589,0.36790278883939814,2.3923527712049673,1.6039539907142732,-0.6392876046978615,1.4520949871389826,-2.298770487708519,-0.010816555838242013,-1.0246053758786344,0.054720661184331845,0.40116984089283764,0.933293963928496,-0.7854905922846281,0.368868772126043,0.38297848633310433,0.00047979605451505995,-0.10773079200168101,-0.0131310751753472:1
-1.1953831002825521,-0.5436324423386452,-0.7273228471744982,-0.9686292597496791,0.7857176389332672,-0.017015392119031397,-0.54258424720089,0.5658396467281496,0.15350970623902646,1.4725376356059783,0.9617462387742776,0.6159586788883317,0.5460328219076955,-0.17421761762447485,-1.5529585552769074,-0.07946330743491213,-1.3708107475963072,0.6143886571766446,-1.0227338312172125,0.6453410425352901,-0.3525811246469941,1.069395607701402,0.04821623368005943,0.32459342795389384,0.5922559665582896,0.6925786558334053,-1.1251446591313714,1.3146396716854298,0.6575222181251645,-0.03742595877361348,-0.2878664576190704,-1.5739458190992366,-0.5123674894318319,0.4422017655757668,-1.895391433467287,0.7038748504786729,0.4203584684598557,1.5838792602633176,1.6341631328072694,-2.4147466800669863,-0.4622498797950187,-0.5405149160989139,-0.6247359380382882,0.9931337565697099,-1.202963885092337,-0.495961270146821,-0.02053701716504648,-1.6357468946319638,-2.3251973349648396,-0.14621827743804303,-0.7151272098059938,1.1005950263673838,-1.4896072423352962,0.0023861940443559043,0.7723916043116984,0.7284649207625048,0.4691466924868626,2.241294099078071,-1.1852446131359322,-0.15735142728356746,0.176976409411219,7.226760628023845e-5,0.11157183805036411,-0.6674883043887581,-0.037767208537829264,0.8433393554226641,-0.7226506311798047,2.1514931120679948,0.3211904995814579,-2.767833717797582,1.178123115765924,0.39698026242671897,-0.5780880896970104,0.9993415228037201,2.362349240733244,0.8346158059916928,0.9639429470747445,0.49987394211046365,-0.959825106129818,0.15115102761099244,-0.7477611590979518,1.8345829773458402,0.08379564710751454,-0.6827509808857266,-0.8096559378901672,-0.81961410577236,0.7609516658904956,0.8058905763436031,-2.3235078371004483,-0.7182495688612832,1.1373897635514214,-0.6047076902557554,2.3771331813212653,-0.37843772989059055,-1.20839407467288,-0.16301098389960905,-0.8022268582878367,-1.6803859885233157,1.409414643559068,-1.2068749737797062,0.10832203432926016,0.2552155965966191,-0.08555075566588534,-0.5045182983115986,1.3158351102502264,1.4747555155531265,-0.7518147191969695,0.5937145327873639,2.07255502985338,0.32456896762381243,-0.2313729854240427,-2.15136357015716,-0.9878803869908165,-0.09217113014104233,-0.586753846025071,0.39370948004293993,-0.2933031340926742,-0.7937353632639331,1.7541581939031452,0.8884535989824112,-0.4465921221324636,-0.5936660246980401,-0.18658377368576232,0.2727837024035448,0.9372343332065775,1.3812818400656357,-0.8350768990914419,0.5486436714049103:0
0.12384093376898653,1.3923948088653828,-0.023049865346786085,-0.12035117416282883,-0.5820041131240761,0.21972045138189392,-0.1907269161463168,0.8945960783338622,0.7081409968854246,2.1163980557426965,-0.01047743743532873,1.7376688682975434,0.5824638090254625,-0.1975165948811109,-0.8155574433282489,-0.6641035766142345,-0.6579926841186836,-0.5014998746598943,-0.12549701847881445,-1.4790738624533644,-0.5709653659762958,0.036607761264104394,0.7217376027422996,-1.5583840686412167,0.44074057758287466,0.4745484748068172,-0.6916281570308557,0.438405089632688,0.040704142062895514,0.45214947050871196,0.24913684731901317,0.001661892936733784,-0.41897724194915786,-0.38764746697544744,1.8769628180925397,-0.7534011607998466,-0.031223633935626313,-1.4855764246099479,0.6111701625216139,0.23037671403737728,0.16280682999703405,-0.3764491465714391,-0.015512652792068739,-0.10004181626273727,-0.005107476490946212,0.043861775262077046,-1.068663664118469,-0.08522457070565607,-0.11630568081874582,-0.12086644542979265,-0.009398372037802784,0.5484619979630576,0.4748191850121696,0.2860007412506258,0.37873827389549636,-1.4441146908615994,0.24027059779394158,-0.11886473390617167,0.06869598753480911,-0.476171996684914,-1.8569567136124208,-0.037147607457555666,0.7974365068840716,1.3442067351609197,-1.3985488404680337,0.9502706117585381,-2.4404599465058956,-0.2029203527747607,0.35667080217755087,-0.09236888313664661,0.5846778001172948,0.02608057088565934,0.7745751633394574,1.1472813248356966,-0.12781310187319156,-0.15420108144093395,-0.24008618729065637,0.12419149163008791,2.078839360034173,-0.6488487011527112,-0.31299602440327207,0.3934478695693034,-0.8396932885682171,-0.046174153242445795,-0.515485642520739,0.5601288946046502,0.2870737825214917,0.1376400660553629,-0.256670423775409,-0.4088881582655623,0.12329780948894173,0.8372810477194416,-0.6580199157650053,-0.11719728054198986,-0.7896855942226723,-2.2326950830872847,-0.48710988082012135,-0.38983223654168264,-0.9030608230410224,0.47197735511925565,0.5542450433549714,-0.1301386469395005,-2.9669669131669094,0.5413926070163062,-0.034460730272294834,-0.27135755147419693,1.9158825363633556,0.5247931917160901,0.43008993263761025,2.458942027349066,0.002922962788332368,-1.0849885960994279,-1.0045376086562738,0.22257099832216715,0.36628076038787655,0.5273603706550325,-0.2910919200388211,-0.16147910189800588,-0.03985579842030216,0.16571649672491587,-0.912794281898552,0.12233342276713087,0.4870617780725986,0.20693408889174358,0.6020486677491854,0.5635277183663987,-1.074319610200428,-0.02270283976176054:1
-0.49503612871955,-0.7576045532142404,0.1960533933166051,-1.4096256471211077,0.1790778638197506,-0.10464658510091772,0.5548603550500737,0.5702554802769377,2.3509311115881957,-0.4876173508228036,0.6162415994895882,-0.6122684786584538,-0.39974021768941387,0.11619152561385984,-0.6568259177094893,0.8046166595766964,0.32059598702121267,0.7857400324583842,1.496145655917206,-1.184874542517586,0.6605877832907328,-1.4776093535438002,-0.44879061535299564,-0.14114376522093888,0.723297533970984,0.04024920613636841,-0.904172895694731,-0.3347255468623899,-0.7023845220397938,1.9309971601493978,-0.19551366482207874,-1.5410861100991613,0.5229388160605407,0.4048297839144098,0.7340559857103006,0.6737723882294292,-0.9694094912710173,-1.6984819515081413,0.0697275838076112,-0.7438030235880934,0.3444505240051319,0.20582946627543616,-0.5151836684151542,2.0875013287440303,-1.209605368287849,0.24209794936143966,0.9355631142032443,0.6327220211404372,-0.7123307800145315,-0.21359566258808382,0.4088736051026769,0.31398542193894996,0.009494743861432326,0.8385207100973343,-1.2189233538096038,1.1806339354180229,1.0755483412149323,-0.3621107922304324,0.6125013370653285,-0.09134633502661657,0.07867100853737842,-1.46494323394494,1.0767641288807297,0.2898923696400065,-0.043573191515619954,1.1794542671301416,0.4269627692757128,0.3551071971241964,1.1239119633761632,-1.034879012127282,0.4468774453920313,-1.0357466038061933,-0.24235221578976646,1.1340885363640645,-2.7151370527463445,1.063363088181517,0.901504429006185,-0.6868426058076246,-0.7691995064633546,-0.26038057234030976,-0.09461724892044902,0.24600696341866946,1.8879339855197772,-2.458858756919516,0.08561915113952229,0.90020568226047,-1.890398956686151,0.20230202706202888,0.4607236140750034,0.4792249514048833,1.1224275566620896,-0.019574752218040677,-0.6846723597144002,-0.1099828445069348,-0.08826528642239491,-0.17856085388657386,-0.0363696433416097,0.0830858208302533,1.7573753534738004,-0.8093358384736694,-0.9553832882908534,0.5962521962888424,-1.2899414238602938,-0.3329646589077445,0.05513086635066368,-0.17918454829160252,0.15262060668321903,0.46139866676435776,-0.14912436146843702,-0.8795285796392678,2.99491040528792,0.35023342580360883,-1.3544038119828665,0.6715677683050013,1.336920415663134,-1.623479393468804,1.4020204931979965,0.5997208016764233,-0.053795287187547274,0.006639928314952739,1.4121253880858595,0.34868870269213353,-0.4831193416185198,0.07950683402568617,0.3584301389051068,0.28682604803076606,-0.8703809258257631,-0.8039623102817267:0
-2.2553287862990814,-0.4367236039124993,0.10150267766072572,1.7327679894776868,1.6107945183263448,1.6491312103447697,-0.8837778679827986,0.3778780612397615,0.10158065604377187,0.009885839234333421,-1.5887908756662652,-0.6142712318514773,0.13216469751495558,-1.2600942639584545,-0.8150937285234898,-0.4003359609377648,0.7723128135492637,0.37281089452281446,-0.11794332370686109,1.3503942462118843,0.825706427373264,2.090854137766678,0.581286584615506,-2.380719283461346,0.13883437350192357,0.15146912468010718,0.1467857598766482,0.14478333785512576,0.06078505748340811,-0.10963570560553806,-0.0955135757744169,0.6697587293725541,1.9761321481724115,-2.684134103116286,-0.31662373715789727,0.543552468333141,0.6208608966938882,0.1144130389237707,0.4104090877253408,0.2444422086078325,0.5820490687162022,1.1693962854438296,-0.41157833119651055,0.7913431267467033,1.7387860242984048,0.048513663916782204,0.4766315693134839,0.16333950005451126,-0.3594757958844226,0.1886413174534319,-0.1919166733027056,0.16957841991378184,0.8082302053330569,-0.8394220915262993,3.4636551111812626,-0.8936047901323514,-0.15444414533211595,-0.4514204549121423,-0.0717424368460799,1.5457521375298917,0.07608955513779228,0.6599067645936431,0.23360119962679388,0.3394666282537087,0.2097547031654492,1.2912632492725804,0.0035073764714228235,-0.5843647918024328,-0.1523730813055334,-3.9813854255329644,-0.678207744977174,-1.408815567688927,0.47366284599354547,0.3122748520772537,-0.4778089181073732,-0.3435677955179383,1.9591599511688267,0.7475902504247498,-0.008545099169517827,1.9129910720845882,0.44082230049212456,2.607337360066836,0.3652883826514729,0.37130560564705284,0.7921049570344014,-0.394360531202342,1.003223747224257,-0.5995514651531506,-2.3672174781821917,-0.18803244808754385,0.4597624232839671,1.4341845541836051,-0.40105718859156636,0.2077529616446486,0.29863205573830925,0.2740732682957681,1.7604566551510772,-0.9671673497644884,-0.4711752460159176,-0.7375780348867625,-0.2462258154275169,0.21833160860173342,-0.858718623407153,-0.4866283729470381,-0.672196120021355,-0.39202216235141824,-0.024936001017818826,-0.33178235010121254,1.99068820767935,0.1630508693725376,0.31889618133644837,1.595702073153246,-1.203114688379445,1.5215135148414094,0.22660476033384166,0.0668966160877737,0.3386126088843736,1.6975483116259276,-1.6778956769942117,-0.7410993670836047,-0.3440406157810922,-0.3455384571907969,0.02435152783715474,-1.7618307392084491,-1.1254189572210953,0.48844200325508025,-0.8090579611471427,0.41010497992650297:1
-0.9480653373119676,-0.9051327798140589,-0.11434748056262352,0.9572129404709188,0.1168531550965573,-1.0140449007112422,0.5076284459723067,-0.20076171023271583,-1.3009916520643008,-0.8915877252012521,2.150378300213881,-0.9194471997757362,-0.028407437105944337,-1.2069502405197183,-0.03644640431337783,1.7537174913503957,0.20041095538323345,0.05578055861934555,-1.9847097279319585,-0.4716792543781765,-0.058610260639175564,-0.009864158193489951,-1.4693562970912288,-0.0796052987882773,1.418114531135095,-1.2451786962072555,-1.5298909809704113,-0.31479595915316644,-0.8601612807966357,0.23647445249088034,-0.41799701259538036,-1.690767738264365,0.16531670269510362,-0.6470888164990368,-0.5990730593358572,0.23630957923889104,-1.0597120753675722,0.8850995575351673,-1.1327450178446743,0.4264803188336797,-0.5871708999171132,0.4225255201429595,1.260752364078128,-0.8613699601427953,0.02770364470905777,-0.49243703401975597,-0.9854084618291539,0.31413552378532633,-0.8169134006277978,-1.065547633340768,-1.6927100011863179,1.8675349573695093,1.1348227615803708,1.1214088479249085,0.04594934846764845,-0.8102851985403532,1.3149832948718043,-1.5171487902002745,-1.7500193158766322,-1.5233009867218337,-0.3034217319412853,-1.1429585861606917,1.2947899488114312,-1.4671509261241258,-2.0409700463999805,0.3393688900344996,-0.42812493956894515,-0.673781662302597,-1.1442821654531004,-0.8391280682396789,-0.9679614932824825,0.026070388992939127,1.125016401365998,0.5058287730062088,0.34470645168979924,-1.377309360509385,-0.6857771804952288,-0.3685253394670469,-0.7580261238026601,0.4530692346590883,1.0316016825588683,0.997711224033003,0.3359487246863424,-0.1278332442259225,-0.4744018028575775,-1.3173427183270263,1.065900026455031,-0.23917813715279784,-0.38283414649195674,0.7462075874761952,0.2310743766170471,0.25164419776906694,-1.4021522679805796,-0.4408482288042161,-0.12883210312965682,0.955632793810609,-0.06649391263177944,-0.3578903037585109,-0.16318158643820072,-0.2324174635686647,0.11196718040744714,-0.2835848669447881,0.9375447830004295,0.12232192021978769,-0.6430405751869469,-0.35714065457780303,0.3850599748624811,-0.08872484939215251,0.09204605886966705,1.353741641268529,-0.15964691787538388,0.5925702470926357,0.49742938081646254,0.5060754054494518,1.21479540416192,-2.813991082664638,1.0419975583387766,-0.45651086756434056,-0.43325269671968203,-0.8538641635741198,0.19811134528144178,-0.1862110506281691,0.09287971175472794,-0.5007002491216505,-0.01585614721878622,1.5814803477575987,0.04906468024622358,-0.9812731338145061:0
0.007429683865683656,1.2961776891809873,0.37506492087377696,0.7258026438194329,-0.6267398235992385,-0.6145918798435205,-2.9388927398585145,2.6293327399507276,1.0062224277303442,-1.4854418136715375,-0.5557666112716595,2.757956446148662,0.8492341062099236,0.4450113445542068,-0.13295202540992257,0.08377544932434215,0.7488206671518551,-0.19123018711160855,1.828906961699797,-0.20234920343919738,0.7381598743204993,0.06358635487225885,-0.7690369329692553,-0.6147688178274624,0.2995380031280296,1.0059993935782985,1.0568961630566454,0.2438173856339181,0.2637757495423438,2.0130373294091712,-0.45814416953519765,-0.7961781668861592,0.0021063937323234985,0.38118818863850135,0.19983546270903138,0.17941023302761736,-1.2558470969287057,0.7804009902546397,0.277085735895729,0.5912183710013009,-0.2212820753259251,0.6647458102835414,0.5333713684529339,0.6761198572169468,0.3661246863053498,-0.7078526940148373,2.864257616663405,0.4843797888976525,0.303937957286917,0.5828234478429876,0.7127010594348904,-0.12616731334331222,-0.9699186397627884,-0.07543966236801546,-0.16446401062654203,0.6195394231874229,0.504726229612278,1.1270510236444822,0.14703628690982382,-0.5085222451436433,-0.6960203809628852,-0.15628044349612152,0.6253032363124913,-0.030990045536232216,1.190441852369366,1.6740764429730348,0.9924751314359684,1.447082534688304,2.8057810283230387,-0.22472032770768105,0.10921465022788515,0.6099339282846097,0.3005713789490308,0.28915556267198517,-1.3195128773788805,-2.945647633361945,-0.9812071241198885,-0.25406004766180473,-0.02232678371629349,-0.054463882652301746,0.10250797662973844,0.29730445328569943,-0.3972612068222584,1.9619538501853475,-1.5660393821755962,-0.17450090671026974,-3.5957593771030587,0.8445490392842575,1.339266817419304,1.1400386980627728,0.4684197672826797,-0.08960126546761613,0.05714501833589314,-0.1469737401778758,0.17326557924920546,0.1418991122663168,-0.06926731391964079,-0.5441560245609501,0.7991551922630197,-1.3836063572630342,0.20862154937379704,-0.10386792612652915,-0.02240936473307274,0.02705478505528203,0.17209831508617668,1.8569114278982066,0.9697682586340504,0.04196581272384196,0.05018709953231152,0.5671947024571729,-0.5326548298071807,0.13348635218679392,0.013285536822921355,2.4399633786139137,-0.06078052130626967,-0.6190655211354048,-0.28487246610770683,-0.7660356195268195,-0.31035077754348384,-0.8562719948314772,-2.164919404595909,-0.13166171143978123,1.2310034715607636,-0.15036974169784822,0.5440779903234706,0.04236965183604813,-0.4066722618481186,-1.0811075996163488:1
0.41632267097805786,0.2629449369676191,1.5369179167198035,-0.6437413539232639,0.8254391349927275,0.46950737812747306,-0.6112607562498316,0.9487545243151932,-1.4671968001068423,0.5064774929257178,-0.6535974804325915,-0.264834531888876,1.0985803079163128,-1.5613007343517038,1.3708742453917502,-0.6414128630394231,0.3377619025062178,0.04318267755843863,-0.8473133869551357,-0.07319596154060774,-1.5566322087347437,-0.08017645510082848,-0.7595093113657803,0.06762456248424487,-1.3571101793732463,0.747378385182729,-1.19250167566799,-0.9194896280375124,-1.6852716134134134,-0.39029783653208683,-0.7534470060251517,-0.8315564860661728,1.5885148607757875,-0.6917824772601411,1.211577671507147,0.02138036935183751,-1.809324959243481,-1.197030702597331,-0.0597333937700648,1.8285189359667486,1.5447968263656842,1.241449404108905,-1.5073421929735678,-0.4381537834209014,2.0459245071976717,1.0759290619098518,-1.2718423117378441,1.2933626573537829,0.26529398849540353,1.1731187463000776,-1.4808815880546158,-0.867209292340294,0.25720473935523935,1.1211790461184217,0.24320397043255007,-1.1112575379143794,0.44709236569340266,-1.3326630777672726,1.582732681708491,-1.7229894753538295,2.630540855098397,-0.22532100595613294,0.21260592045926943,0.14824582986920865,-1.0977872389848764,0.9329016168910794,-1.085235098804523,0.5855626840071864,-1.6857741135919109,0.488584207482954,0.1937019348932606,0.457322667190018,-0.33992256286725303,-1.2990454172032397,0.8706426945597849,0.16431233514902194,-1.4010435252574003,0.8017982190749987,0.84734086624447,0.3796005153214687,1.0756703999902701,-0.23342887523953912,2.57111406933124,-0.516861761059308,-0.7669453958599349,-0.1727677149532787,0.3474680926918491,2.3241991639701753,0.8811799978195283,0.9150609135248975,2.2263615509023107,1.2916219160316138,0.6225465549320442,0.3695322993991609,0.09502103681118405,1.1110550845540375,-0.1442383296901998,-0.3907397010997904,-1.326210907851375,-1.9212968356985396,1.5361525758546106,-0.3036092381872682,0.7092031146529872,-2.5231380860204906,1.333471253425789,-1.4947607745699374,-1.1577321301803083,0.4773526784714988,-0.17282683295036227,0.15359975603427425,0.22658457520229713,-0.7568888689296028,0.22478002725207255,0.5019254558722428,-0.4361253848715255,0.9580201021943706,-0.9075372540750852,-1.8973535752825479,-0.358136449890671,-0.7269758598788889,-1.1188294675863917,-1.7134249536165844,0.23097871006989215,-1.5752688846446883,-2.0406614507698837,1.3762749452875367,0.6975738563180678,-0.4364061811895883:0
2.1589026103290525,0.2831316518309077,0.19165206804622353,0.7099763098569924,2.040037673663369,-0.056492430914204424,0.5599496018079516,-1.8375424297110283,-1.0144647399512587,0.1020135895790802,0.4203930717550096,-1.891475457978489,-1.5294825961234844,-0.21470775553648286,0.5258241789619146,3.227748739025098,-1.3234856538043676,-3.915986559301631,-0.5253033278777988,0.7205379676417579,1.1795691354726217,-0.20249625193743093,-0.14530566540042533,-0.2218513054723295,1.4715358683524027,-1.1265014523616195,-0.9909807602041543,-0.5353712148612586,-1.3320466898122079,1.8586848355679186,-0.15210409257937257,0.06732943565833345,0.7143276470898212,0.25282097114072144,-0.7782469387169222,0.3996556498120387,0.17647842389136728,0.6241867426182015,0.7415259319646605,0.8721482763479679,0.01792962114466579,0.7583410958918434,-0.24183586314462815,-1.3445271963546606,1.1065950804071933,1.4387483958189191,-0.14687038107529873,-0.11152595813243477,-0.15468291485415875,-1.1009787158759592,-0.9306683346170429,-0.5884953689971233,-1.263072935517572,0.5091365757916256,0.6648674787256363,0.4295324053554599,0.1923369503303097,-1.1593685355189145,-1.2079569041784917,1.3807186972884276,0.4383297942101141,-0.32389295726456324,-0.9852268384042754,0.8682091212030085,-0.020862878915650262,1.36911961947926,-0.11039961186671571,-0.02614904958998581,-0.6158605193446965,-1.8238986563519435,-0.019150179867678602,-0.42119143754786276,-0.625979701058448,-1.7605297388034444,-0.9627925339750378,1.6703534721826998,1.2795616303830375,0.5371133938311244,0.6457212997734628,0.6527613056363973,-0.26360061929329276,-0.5506614845632657,-3.335505972639893,0.49401262617976355,0.20161875410766938,-0.009277100345170588,-0.29080802562649877,2.8204922261723135,0.17497851630615305,-0.26637556767410386,-0.5012448712404048,-0.0009043761876413101,1.2411598267525272,1.3000704378296084,0.2776679232620465,0.6856942024167899,1.7377955555532083,0.378599404829664,-2.8166649208236554,-0.29250075537924786,1.1247430795526008,-1.5088898727545852,0.06632977191091301,-1.1296854942003767,-0.05966837767283431,-0.5437435450123541,-0.12967157096024717,0.31780019337988547,-0.05608544668419885,1.0764313680997806,-0.025005685143420088,-0.43474135568251526,0.21076972694938362,-0.9703937157526371,0.025224744715709273,0.0017073991431457041,1.8348055068546376,0.6811482799492787,0.8777241614819195,-0.04927089348086498,0.2645050792390946,-4.125598137544047,-0.06381838312994784,-0.4251391530532736,0.10136403149838688,-0.8508766186715009,1.9165977127596965,0.11745593656886057:1
-0.7670598342053562,0.15298993521929852,0.21363980747377173,-0.5187077280799881,-2.82034856936782,1.8556821740639386,-2.1718158257333946,-1.7693168729713926,-2.1952917002607486,0.2968559336746197,-0.46351411061289405,1.0970650557900972,-0.47825073266673285,2.3390902561437397,0.8903133768821767,-2.287761266469653,0.9259705905995038,-2.2771972196683876,0.11539758186457735,0.4333828272875517,-0.4634652006232744,0.03321841468594788,1.0487228570652485,-0.8752681868607093,0.4656607950520939,-1.2618599746195032,1.1034975470092208,-1.0582127461729107,-0.16652218488583423,-0.3403535676433372,-2.078476676347491,0.6708167333483352,1.4313143519144398,-0.1536615077876875,-1.6686780768490175,0.5099477642562493,1.5137087317029394,-0.309474539479221,0.9237478866388786,-0.6833583919920335,-0.35771963258834605,0.9859237249223505,-1.086811452133162,-1.346253018843128,-0.27567537598632386,1.6601264454223554,-1.0111801788569479,-0.8644207754719007,0.5500544458869387,0.9791517504535513,0.07556218138729016,-1.311230801755351,-0.407059875501945,0.6857407371500719,-0.005206867260338084,-0.599371539425471,0.8054571203050013,-0.16378524959615925,0.4240900893015757,1.9674023539261527,3.224955721352067,0.11720960388108025,2.2011502628167836,0.6242422394690821,-1.2480575587817255,2.6364002781892473,1.3061453890299255,0.8694974803278728,0.04567069913818739,-1.1762331127585792,0.5958434664785831,-0.5511219800021134,1.275267783144562,-1.2391358161863408,1.6391108337760625,-0.5320830762235118,0.01528648427168735,0.4555707159443582,-0.8778243841697777,0.4557152512501639,-1.0687939615639757,-0.31385660886828376,-1.2674720815739478,1.0623413721495727,-0.9944178817255347,0.01803065881597206,0.9766549256297393,0.39897902953705877,-0.3521160613796022,0.6784524591467743,0.031249564897068365,2.8537099850112932,-0.291621302340409,0.09237189744505943,-0.40757690021507914,1.3781884804329627,0.05870119212799187,0.2953727984882335,0.016707735697994282,1.89353943458589,-0.35817179949268396,-1.2872966619265145,0.016596052642145545,-1.2204391724152197,-0.4845048292621288,-1.4113714595319733,0.2661764206713997,0.007981462885231397,-1.2453527952789916,0.08299779240167238,-0.4594274137500347,-0.35153104915287864,-0.024594715209780526,1.0272533794780234,-0.602973142776818,-0.5791762980730991,-0.6498393590196421,1.049579943345955,-0.5790431211660825,0.9598905105191943,0.05257914656875013,-0.7180856101887435,-0.04547200816397964,-2.2020948146950383,-1.620306138289899,0.1469253419162749,0.4529114199266476,-0.8552401327124365:0
0.02611144169061791,0.08126126295592613,-1.116628882612875,0.016680905698436794,0.22304657941033237,-5.7323796622518675,0.07788752734795272,0.6162997454376472,-0.33985067923511475,-1.2832171559360275,-0.03926675157122516,-0.29655589229655854,0.3508078850202604,0.8472730362697456,1.5848529210962574,2.4464753701882715,1.6614534065461597,-0.0738167899518492,-1.2342737725084971,0.31566965019600873,-0.48599517661868635,-1.119862922852389,0.6879817257032647,-0.2413187664066447,0.2678160261315771,-1.2920704512662584,0.2359917224161201,2.2156421041533947,-0.9307920195146805,0.1738307538590127,-0.6720581534422414,0.6638211871895601,0.7552540373051155,-0.5374541495638859,-0.6558400910428076,-0.8693776993744408,0.43653574578566084,-0.07501239820577979,-2.555278880555196,-0.3138469102895564,-0.9508500023404418,-1.3650079730103493,0.12153495512479587,-0.6474049729319379,-0.737270620969512,0.8422338525650128,0.9922774448938251,1.5361350288090219,-0.1874906446282082,-0.009920795760832964,-0.1395315928072946,0.8557491548640099,1.0589880494068251,-1.2415984978461108,-0.09565910662538983,1.9949341877039584,-0.7299364317489061,0.6942051836571315,0.6160358069945172,1.4956108795757805,0.8994813620430816,0.6504291669171506,-0.09687112634336553,0.36338642937453586,-1.3623405909466084,0.21501840200257802,-4.968861585667318,-0.07920784494712552,1.4034602082046748,-0.6167546546996858,-0.3988461741825648,-0.8909061519534012,0.22124008376333718,-0.49177102498738223,-0.14641166427116678,-0.47715634348443736,-0.9794503510946257,0.03202184458009675,-1.0536729932272946,0.3615363231340026,0.3112550629526418,-0.9706903607900149,-0.19801904796452108,1.1239877228170305,-0.6474329478303041,-0.025698712892481494,0.5154969599118736,-0.1911612436855247,0.15902751805172533,0.1947083065418337,-0.5180372594011164,0.058149598857056735,0.40825790944830515,-1.1401537840689222,-2.056848337926459,0.2516773549520853,0.5892587672656759,0.06713150530271424,-0.21034454726852345,1.1166609301139836,0.4310554876054594,0.27216153106009683,-0.42982287510814243,-0.05377723561053714,0.28023909898959304,0.15983073706039747,-0.08602014038936305,-0.4223000810491159,-0.1143193832369707,0.15389453584753593,-0.341381990333596,0.502829534593012,1.2507914392573867,-0.4138403813042878,1.1994665434368788,-0.1909222137693456,-0.5893751657882718,-0.3378214828727877,1.1251340264279799,0.09945109485414864,-0.9288882582615281,-1.4319012107295805,-0.5754026444726797,0.6947822663952617,-0.9790194764358024,-1.4207362683239673,0.19502957643592572,-0.29034434176484:1
-0.5907177303650093,0.3884545687235645,0.7214155779645357,-1.1427039841514526,1.5594733559861065,0.9325526387651075,1.1197190838692577,-0.25745045454392956,-0.7781634311901882,1.1835844743090989,0.3329095062970929,0.9125358218940629,-0.6608577025954592,-1.7149073070673244,0.0494771899660202,-1.3326609469545978,-0.893252595136023,1.5676771955540405,-0.9740921024326894,0.1972276126172102,0.7249239606736153,1.4398390341306844,0.3713508156490132,-1.8974300720323847,-0.05552094239921313,-1.8829711691014213,-0.07063378668119327,0.12999763147473667,-1.2666618787406936,0.2231545375233925,-0.4783161488074617,-0.23419072989848636,-0.5304003883737015,0.5446255441557797,-0.03302614780368671,-0.4046973781065847,-0.9848314498195249,-0.22928885112521055,0.3964300467556577,-1.7976158663806163,-1.4586490009793749,0.8570858280065857,-2.8637152487610873,0.18683499545670462,-1.2248109104262066,-0.26100328226063624,-0.4319142441600326,-0.680485906204709,-0.6983152072249557,-1.4482240302743055,-0.23784838346989973,1.4571303256386243,0.9197379729128927,-0.37416004168508393,-0.8738434164023259,0.10373957669688569,-1.195127798224389,-0.47050940871878205,1.170277056532278,-0.45352943833550535,-1.4213553349330483,2.060520186426338,0.9108434450578544,-2.8472667341183606,0.8735722903195935,0.3455190164555158,0.24052523677668175,-0.9794410089363872,-0.21024000444522573,-0.6255030900559273,-1.1764101057231353,-1.318453847182144,-0.02309006276354535,-1.1903476104021757,-0.3384736816913025,-0.6729613862615087,0.010927761047063516,0.09015382682085316,-1.6652581739401964,-1.750093248404325,1.8863009419747274,-0.5590974511928968,0.6933920990232878,-0.931986200851114,-0.13827914002767125,1.3783616469537738,-0.22054797475775983,-0.910590596852719,-0.26699955887589844,0.6704480947913322,-1.766609891779936,0.37035476262651834,2.1738846727160226,-0.8720787267719012,-0.20010349371964828,-2.149123189774781,-1.2717345556337016,-0.41760984900798315,0.3508567424874174,1.4326474875127642,0.9221565993085851,0.2505563893317611,-0.13891468999135928,-0.8831573180148745,1.4095283023337906,-1.7428009660130508,-2.2177375028913073,-0.608838919389263,-0.8985057840688345,0.03452684402218283,0.36034361509026025,-1.0703380141933803,-0.4809519348595708,1.1111110406070086,-0.17983199346975093,-0.37289668457980224,-1.3341176245893478,0.750815410830198,-0.5408969295239137,0.39006236943339545,0.2959493178620189,1.841513075267941,0.7407404528652818,0.14710197169122322,0.6780033268932184,-1.61571494349236,-0.4604106001053194,-0.31031357166124585:0
0.07185193305845253,1.2617915163629223,0.3930273209384277,0.882240930931314,-0.09022184029627307,-0.4456526877204092,0.3250655165462095,-1.2151419048437684,-0.13884647899148447,0.5316940253034332,-0.6478655903093702,0.6958680868728836,2.021921833612758,0.19260866120165523,0.5352377305750221,1.0433286164898208,-0.4852552082576739,-1.9400991945409904,0.1896249042869734,-0.4502511058612617,0.766806038442621,0.21880111337753647,-2.7694964034057694,0.6023984659169016,-0.6095590104738159,-1.0430034555666758,-1.1878750545406014,0.40512298814611686,1.2261549959615008,-0.481862097148889,-0.7745863374624041,0.2003889508505802,-1.0452657487359707,-0.44176903885954716,0.9099452963481081,0.25820406865507334,0.35163012905684815,0.4793236034128838,-2.636394980941846,0.3158648962268009,-1.0041996797621262,-0.18364669212624124,-0.2485462469693618,0.04025170038515574,-0.299203406527757,1.1806668915732723,0.78351478084375,-0.28772708898559834,-1.2269102558244964,0.61268286816992,-0.6687885040130179,-1.1420920264437433,0.5173068613418046,-1.5460098663320092,0.18488479042006664,-1.2080950535528479,-0.2570333632916298,-1.0083224047505472,-0.6415098353808897,-0.5755315526796392,1.8017741336688944,3.0458678035258298,-0.1304308500138598,1.2477223636984884,-0.31477956444039773,-0.36794647028197053,-1.5347988972388937,-0.46247233103356095,-0.7390164804822009,-1.245771355085885,0.14699219830632354,0.14786134804228712,1.1418948429131137,-0.49678941155957823,-0.50653174067362,0.1552741148048562,-0.026526400921965187,0.5815111834687733,-0.0596256837969452,0.4227885821860911,-0.8606606566445729,0.39856859742058526,0.2595950755243096,-0.05403320465217754,0.9738168978073055,0.37640517422619707,-0.06056623018922089,-0.31397549501438116,-0.24977706760587165,0.16479451001773052,0.15048948573350315,-0.1594515299432107,0.12446257935647038,-0.31202565914722546,-0.6471569608203835,1.5821119975709252,0.6141144242227591,-0.11213967222153351,0.16411638711464177,-2.6011593827259083,0.7524610344143489,0.2501124907954465,0.6168318915105087,-1.619831415455971,-0.19600875598057585,0.42019795474860927,0.10961154225230718,-0.7613447051078881,-0.0023617735211184008,0.4026960067474482,0.2523610130202664,-0.3955460821113955,0.16486745632463543,-0.7475979535528092,-2.585346893116932,-1.5681729290539588,0.6601168902310361,-3.186407219347872,-0.4755000862349692,0.3745681218071669,0.1361758634688018,0.46132792993409255,1.0199931509130649,-1.0467421452835357,-0.91609125800083,1.0086347718236548,-0.04774420948119153,0.11996414103412832:1
-0.49902591614649444,0.9057677415572243,1.1362944184363057,-0.9035590989958382,-1.013754235687894,0.4622032643162627,1.3606440524838317,-0.3251269456504607,1.2581044780146222,0.5449164737375028,0.3232551009364936,0.414780418438091,-0.1501770729571831,-0.17286215215325332,0.01882075963580056,0.9755414477523419,0.6664364850774963,0.14959066110917066,0.0531444876485806,0.40071184302940294,0.36850730162350637,0.9519823802270713,-0.2933064348909843,-0.7779798329554042,-1.6977279938921053,0.09901549354124382,-1.0925567041186723,0.9004425823681788,-0.15858282165499793,-0.37430523351793327,0.8105291513346974,-0.1117863164347439,0.01875237365675099,-0.27118461684162515,0.2815097373288007,0.6022681728628745,-0.5524125610682754,-0.6214807459577356,2.1033350845288012,1.2844845730287544,-0.12560341075762446,0.21555678938965211,-2.6411202925512254,-2.962373034747983,-0.07322997621340094,1.2440536746148048,1.7034547638220203,1.5434951939299544,0.5902725509887184,0.3268274314888639,-1.0797798547437858,0.5316848023710399,-0.8424024648531551,1.6229774758435926,0.5436856466223993,0.9556705415896116,0.07690370660890754,0.20995244181202882,-0.1573594368439412,-0.3946495773760658,-0.7699090418651166,1.2521476154315871,-0.27088229225541766,-1.1356484540298,-0.36954121546505747,1.1038922382242502,-0.5533875514253992,1.2647885461947053,-0.8521267820672292,-1.7030640340423875,0.54640831327978,-0.2519349018070852,-0.24452455954776664,-0.250684981063735,0.7162218286327853,2.239221813691236,-1.2586767081748504,-0.3044420600769149,-0.932923842394783,0.4407898667476199,0.16356622288261252,0.9048331484558374,1.0260752346610336,-0.08489352123457362,-1.2504517944449878,0.026979002886981417,0.8468842858551421,1.4299165481298513,-0.4030522823848841,0.5125662342511661,2.225739350669977,-0.25106547365158993,0.826125575514603,0.4272657520110629,-0.4953302834112397,0.9251472344640264,3.0291703277376283,1.1906913616005936,-0.25723499197803,-1.514983051602856,0.4685801371499567,-0.4614508000510504,0.19705678935000717,1.672353851905912,0.2686255987975263,0.8407375007214691,1.1564257490878604,0.8291857162439161,-1.861424358476201,0.9100612220656281,-1.0640118366787437,0.22563325229757858,-0.6055321120658761,-1.018079997281001,0.6803254567382012,0.20213933336710252,-0.296965627280995,-0.40963496336317345,-0.12491475302028193,0.4941756252331515,-0.1054861813703128,-0.2995844290158253,-0.9183267081989903,-0.6562148773449639,-1.3089447238159335,0.9635657618607889,-1.0274796984372743,-0.34199321360628576:0
-0.44972586380855906,-0.8370657646819233,0.42120268378535014,-0.7867914991734427,-0.2615528443007347,-2.0357391313041266,-0.3426518614779162,-0.27743337922442635,-0.11260170608637192,0.3638654515617697,0.20145100003470548,-0.6640528160462831,-0.11118207076396257,1.3195124390686865,-0.08993142480429814,0.25394804264795146,0.05098590317989313,-0.21932698806582512,-0.825290108651323,0.27985459613712216,-0.1278549876386064,0.8383357259518678,-0.225789230230531,0.528719333987672,2.5508826789638013,-0.6006172676040328,-0.04376700458077888,0.20999894161187796,-0.43517441782044747,-0.7127089126371235,0.08144249648041503,-0.09239928644489456,-2.5859469068681187,0.6526425033721528,-0.6810756975912464,0.5775563505360058,1.4402351396971713,-1.3423541483947494,0.496390665321064,-0.9019310250747068,-0.9929842837597204,-0.5527788182563327,1.7725110859266662,-0.7508699267720644,-0.6807435787692909,-1.6559952377578526,-0.15889087943133057,-0.1853623911324904,0.5095925463777994,0.22708420828556358,0.07878938784850659,0.5425454403163823,0.332073377297219,0.3201417164076469,0.5169768489173016,0.21131197141433997,-0.08633299223324266,-0.9548087329129752,-0.2830913700087632,-0.5134118918526167,-0.4012975614056607,-1.09867963447743,-0.9499225431970919,-0.12636074635702302,-0.13897404219208814,2.0486150738357023,0.7423163320136482,-0.8242124410228789,-0.8734034231976265,-0.07811474090655553,1.590870924620752,1.0533917428130608,1.5111691185199372,-0.5409214185998442,-0.657312869405602,2.951935010606573,0.21409729726572893,-0.5252367085197275,-0.15291926138013154,0.7169155030579817,-0.9586861651531595,0.3883694628462933,1.3038145259003415,-0.34627247705818853,-0.31098340244432,-0.6663039812050867,-0.6765300224966024,-0.6445046814681078,-1.0779086458445533,0.18100503818887434,-0.912717952951458,-0.6967957833117557,-1.9922004543252032,0.3092853403885785,-0.39540554994462995,0.7657969873290481,1.1457628615941413,0.9961788057650648,0.11523100511153517,-2.072836473813221,2.4420795393571666,-0.6692852464126479,0.04976352112241605,0.5385693540543246,-0.9913377412516646,-0.08946136788502672,-0.32434496294230736,0.5839062412701325,0.48952988685017274,-0.9911875493505635,-0.15116317021615047,0.5124644195610679,-0.12403573554304705,-1.0198358501117513,-0.36726882282710666,-0.6276992587416047,-0.25586087931307466,-0.5936286337711615,-0.07392895105428422,-0.011231102945615273,-0.44959316728688764,1.3882117585203515,-0.6054845047249656,0.6065283861078907,-0.04843113594973336,-0.6495513164189528,1.0237832132525286,-0.11605719776703702:1
-0.6240874599132223,0.22135829255324133,-1.0435913275994757,0.6961599641815787,-0.39515084558367,-1.4606217157566332,-0.11585378423295163,-1.0047497488471122,1.25153264437091,-0.34008115712344206,-1.2566697097060173,-0.27207224208906877,0.856740624424965,0.17248386025943963,0.8284691440645688,1.1099127521128338,0.021414671294123076,-0.07374439591759567,0.5131221394206187,-0.32715681530416807,0.6463467845946406,-0.6566386639881262,-0.3955750933067711,0.8022459444466219,0.7087268908832428,-1.7266927917701043,-1.0811693319603068,0.45579700994876515,-0.4533564481889192,-1.5200533409995372,-1.5070581506720715,-0.5061044907432061,0.40575251546564395,-0.4657336444033249,0.8918494945599827,-0.5433896365771541,0.6004017240832594,-1.0081572020189629,0.7220379497200361,-0.034163000472221226,0.3947209665124559,-1.0450723420057761,-0.7528173531255059,2.5078981674706524,1.910024969171431,-1.969524639523983,0.3890043888490622,0.6170134553705864,0.3025056337265061,-1.160707160289936,1.224798295463197,0.521511276661751,-1.3464291664851586,0.6047405915050368,-1.078455841017207,-0.8722645099688394,1.029849634771367,0.25657070365803414,-2.178460580658221,-0.26325033001257636,0.11708555832763148,0.5633153846116393,-0.4964616551575517,1.541359702476244,0.20713808700465203,0.6820906203646896,-0.46620266216431167,-0.6451339640545202,0.10742654668516416,1.0107391288002774,-1.555254584145602,0.8910982289315621,-0.2445422511873857,0.49502706847743067,0.09097114890768056,-0.20416849609620652,0.7489091181186263,-1.8837293321801523,-0.8151742613940279,0.4590538913343517,-1.635689821866795,-0.052173771616719405,-0.03305615843468434,-1.024240283329909,-0.12886065699680527,-0.3443526796688297,-0.4189701125018822,1.394573442556776,-0.5642835603088184,0.15346023163337172,1.5177377063591042,-1.7787507955805104,2.5406958999490254,-1.177089855299146,1.130044208639109,-0.13288918459631713,1.764327256144565,1.2443916654885478,0.7185499322634796,-0.812594436979308,0.7393777135183056,-0.3999149447753863,0.2108371883240171,0.9628791197502478,-1.3099021245184637,0.08017331577328421,1.197751338002571,0.6996775212771686,0.3102447344145457,1.8168413957501148,-0.2825177794368707,-0.12339821235920498,-0.6111303748915867,-1.0224106325502775,-0.3918237009650254,-0.058406059481584345,0.9362487609342421,-1.3642532782063659,0.3925870998074848,0.061471836355986235,-0.05673779532976418,-0.34055802426111476,0.3323506007038857,-0.4459809836036456,-1.1720556613691326,1.3919675989722389,-0.7928120697603732,0.32364547234781316:0
-1.9458241175698159,0.06521110642928062,0.421643585239648,-0.9571850967250669,-0.7537538657184354,1.2022745684548755,0.5362766450431155,0.013000992273785017,0.34198320685570016,-0.06306687347205789,-0.3876605279452788,-1.200497868065454,0.7456970051935423,-0.22952687309979003,-0.5331612710852659,0.06970790660331218,-0.3620043456632303,-0.28439470145784357,1.1064262084265442,0.09478386315523207,2.4205072755010417,1.061227916638367,-0.5439919629628108,3.518796517164705,0.006819546920064196,0.5248784091183235,-1.1525042842160311,-0.005855473777535159,0.31131083366427165,-0.24048724777881722,0.14629284978224485,0.33557336952198885,-0.3211467044297244,-1.7485072136467483,1.3257465739486736,0.7359939255483693,0.6085667123847709,0.3579633497037616,0.12202925856679243,1.5331277310216997,1.0691057802331685,0.2601611673291746,1.3365137258147761,-0.47756159296897566,-0.06275656845319529,-0.6474974584226179,0.4761893493620174,-0.1634635537061034,-0.12133011513243767,-1.4770229262735288,-0.1044858787467182,0.4266647194506634,-0.20270570639798124,-0.25073762870461364,-1.1235913967007454,1.5292585647802543,0.0429515383297826,-0.844097487360705,-1.546536815601627,-2.2071093527141303,-1.0189025020777251,-1.1696268780911583,0.43102300698787993,-0.17789852490478028,2.051130302261642,0.0960197499463561,-0.3289995851202594,0.854162175877664,0.9555310846056173,-0.7945894311471084,0.9803547526356178,-0.030719030977599336,0.09373095805023787,1.503738389190539,0.06965889051304892,-1.7140070837870316,-0.8743740897456163,2.6801164841589182,-0.19150675204211998,0.2865933397463618,-0.812312576108072,-0.6091132765132948,-1.1601481783736998,-1.2235879457639383,-0.02871205935637347,0.25907758920465684,-0.44420074325430214,0.21468752901729637,-1.5182080759592542,0.21879783785442505,-0.47655579052779606,1.6403907420306156,-0.21612560269268163,0.23880596535743656,0.9203680235970352,-0.5576434179500208,0.04833012673915915,-0.8314537705887561,-0.3909635852712291,0.6498461579480458,-0.5705606714592125,-0.3910225417049612,0.6414302234205413,2.595111282910767,-2.2158942661465044,-0.5633042474359177,-0.8778301749302349,0.1418865172633708,0.5571379302632258,-0.017943882886042574,0.08138546651806705,-0.5962203075413651,-0.1011884064833882,0.31178535056091955,-0.13348324253139518,-0.17179166598169038,1.230302363877388,-0.09770493112409404,-2.8718541431824445,-0.8928237958862368,-0.06472749613676354,1.165354184082287,0.01830854867479023,-2.3974746995509486,0.12927427367527017,0.04554990894813898,-0.6121813802390208,-2.242665044164436:1
0.23297510538697153,-0.7364011351349345,0.6466431959908625,0.1892090260434433,-0.03645280061369213,-2.5275497384356105,1.196575316163988,0.42203455624261965,0.6249320018855281,0.7469545101250787,-0.6645538111335407,0.02067879855746119,0.34164534280699915,-0.2754945656671762,-0.20528734566968085,-0.5767006145983145,0.02911023319682908,0.7580780584704323,-1.0780544893876989,1.0253958770737883,0.9221642671805864,0.11442900544500714,1.0467720339255702,-0.6058778029815558,0.6969256559899527,0.44733188624625536,1.9773835209154667,-2.4798171577349626,0.8397543830182609,1.526038500279787,0.35939398720950294,1.3153908842653834,-0.713729900490121,-2.1313692683440646,2.0870790874759537,-0.15132439670344022,1.3990519334031268,-1.0545556337010427,-0.002762430255240098,1.0365258126998043,1.5243947616024722,-0.64062201457425,0.9629651739601823,-0.6844690224254678,0.28640264163460893,1.0661242871701755,-0.2280788890773701,0.91232389564976,-1.214923300704945,-0.025392026836566377,-0.4668488592768421,1.1084275866492648,0.6575824833952304,-0.8001702853122753,0.23946002605232314,0.1307412045484355,0.13584367639321934,-0.6877223048460184,1.6017571967587432,0.8954921341177337,-1.1076540885181736,-0.8409929627510081,0.4615085383033778,-2.4212158733015428,-0.06072217341674939,0.1639581737445088,0.5353127962571741,2.125771679197352,-0.004507308828774667,-1.733083804016888,-0.8542851333922575,-1.0659921006155262,0.9040401999480706,0.06480737497102916,-0.31190791740950674,-0.2891928954658926,-1.6205160935093594,-0.16704563117793134,-0.5000006377938075,2.385986340302227,-1.2830690963568727,-1.7698206696224301,0.625233618320733,-0.3425708030013622,1.3302451203175596,-0.3263720064439978,1.8095789167383067,-2.604054476542975,-1.4706269543582402,1.2961642529250437,-0.26496701943209044,1.0665599821061562,-0.6025756135952682,-1.4527022291046787,-0.8632548373245942,-0.6026091837844351,-0.2824929336029345,1.0213359543524818,0.29979306591687926,2.5369889090458373,-0.11085893204401491,-0.3361830529815703,2.7370973238350302,-0.8721425137966654,-0.6308158340019075,1.0758985408230723,1.3211303880765348,0.47807399854343646,1.1942015668416504,0.3873789857712954,1.9444355497533476,-0.7182871163800708,0.6057697543469831,2.6382935795198206,1.4436828949030573,0.20988321228511755,-0.15805452261888386,-0.2411422683891833,1.9700853038969444,-0.5747594992962988,-0.12662942401233102,1.5878593039578361,-0.9580262620880302,0.2402059033004377,0.6471069088859517,1.7700792295839554,-0.9788253467993839,1.2550301900465695:0
0.2778087925053923,-0.20780376814695375,-0.6897765218613989,-1.2992777041227588,0.9957427889048075,-0.14547563780709366,0.3352597386607474,0.12349532762882226,-0.02756983327563078,0.05489190825926883,-0.9694588071956978,-1.1571762570498891,-0.7821780006459903,-0.8203397683524568,0.375162174829549,1.1234604919325024,-1.8770942069331622,-0.27726074679723794,-0.6528110326546961,-1.4462779656204199,-0.4396389375872883,-0.1351956477385113,0.09062437314168659,-2.068262750131349,-0.26501266596991896,-0.23443119654927133,-0.09057337086906575,-0.010939781370563008,-0.3654140763275045,0.8513456731223861,-1.1530559641962697,1.5465581212646404,3.370302025263164,-0.32386393184191437,-0.5306619551776207,0.3628514287165419,-0.9761341300531011,0.07552216162868179,2.9062421037970174,0.09947851113876756,-1.0219687248798894,-0.5963206215705495,-1.5572653829769698,0.08418387389858879,0.5956646903861216,-0.41306220986652087,0.4104013797076733,2.765790056458464,-0.47309409351578796,-0.37437588012252254,-0.5538402146009027,0.6371563760741497,1.3809297481286518,2.0413375303754293,-0.6823248718885925,0.6203739201880769,-0.4808284319771269,-1.6295188689432172,0.3368417474882995,-0.4215377676249741,0.28279496019297273,-2.036588336787923,-0.7910743688879286,-0.4449209980285991,-0.09731418344220319,1.2642190405267786,-0.9063545086052277,0.003485354335407421,0.02343885151499211,0.13828652600530772,-0.17334811410818457,0.5684651681766422,-0.6980092595696967,0.014067879439907323,0.25104180238572205,-1.6408274561537746,0.8062883889115835,-1.270871697462541,-3.0146901283077336,-0.9498500888682403,0.017430198518072808,0.09357624598813168,0.6035879082429157,-1.6882427479277384,0.001981136833821873,0.936777659756662,1.0271314794331068,0.33553424199992876,-1.9469268092583845,0.11012347193287657,0.23141363622531025,0.8219062278113353,-1.2382460402113422,-0.9980314276729709,-0.5216945265808034,1.6011231245792994,-0.572485511434992,0.9483904884870245,0.4010654264906417,-0.551368966062066,-0.6742450574445102,0.4031700194097499,-1.3913864546901193,-1.0393597491883502,-0.33357617923772076,-1.2046798013371647,-0.5381107653221365,-0.19244754998055927,1.285097872906384,-1.062059567459447,0.5456025148975908,0.06833101570920373,1.4133125321591735,0.40668569088641565,0.8317629863584076,1.9727555126087644,-0.019181083737404108,-0.03006074518578815,-1.203645887935449,-0.6146887592581006,-0.10655060982510263,-0.8574468422136905,1.9640037284862677,0.27611274471886416,0.1817808736834915,-0.5431206846265799,-0.30662188809590846,2.950453341217393:1
0.32926255073851807,0.2876667799741548,-0.19351600065444563,1.0772725560933023,-0.2686686672697036,0.9207401657955284,0.02206424701011112,-0.09158048448992968,-1.9806119681136418,0.5009480053964033,0.8083411853724446,0.18876926178433653,0.6169186443991751,1.153216647171888,-0.9755305537558927,-1.678632707744726,-0.5347543826217223,0.3370134953851646,0.2771738667101414,0.8980880402349753,0.16480724833977156,-0.4239397976647854,0.5001974085290856,0.45458270104309234,-1.7639208113937024,0.30119883869197245,-0.0054592383507667385,-0.8326088891408575,-0.2865650690006237,-0.5183315979576878,0.8645361324398286,1.3683050392540748,1.0727161831219927,-2.138679085675743,-0.27172222257960615,-1.8188785113075292,-0.7519550815269666,-2.551734388012887,-2.119928530818419,-0.2481433244110129,-1.4384670181185548,0.9650560086295032,1.411771022540594,-1.6855720170825093,0.3237047829537345,-2.079435488530014,1.7013601537169971,-0.5409872107384321,-0.13663474088239694,-1.3064585273643194,1.7180849094772883,0.5649821194023719,0.8316218295472484,-0.2798142487824293,0.5922452679486125,-0.9558785338933404,0.45002282757377626,-0.020618491159396776,-0.1309120193218408,1.472793611808918,-0.4550350254258051,-1.091125363354384,0.9756210043338374,-0.7539019183466972,0.6296173268256217,-1.6535198473126171,1.985622559139315,0.5067324851303249,-0.4322779749038598,0.9158619662489778,0.01470018661175672,0.8389548651781419,-0.8469184128638194,-0.4122545448595114,-0.3488308079739222,-2.1055088556434525,-0.07093511123764493,1.5025412896468089,-0.13056532090609613,-0.022344333453246122,-1.8494708392567814,-0.30166530961346144,0.7489936774059739,-0.6370546673468311,-0.5162412126352324,-0.22957482834329979,0.019104786594077907,1.1185946743654938,0.13840350157504622,-0.36421608052483306,-1.1860651335459602,0.40987500443302977,0.5586152139846361,0.028275181228311453,1.7781633567327562,-2.476914802504232,-1.1210727782457737,1.962352389709846,0.6626865842856451,0.20806028468777638,0.22085768184441626,-1.1624108772198687,0.9017450206168591,-2.2978673942769583,-0.8021156560283906,-2.3849016490623867,-0.8840672945977242,0.4240925559544178,-0.1973110619339543,0.534475638518817,-1.1553054471995687,-1.4987780707879845,0.5807723390763583,-0.25686228244566955,-1.1003532731588168,-1.7332144294854996,0.03657924188812252,-0.5256671607040463,0.7221926007813481,0.5162491608872762,-0.4794670218036131,-0.2063524610441519,0.6852192907007413,0.8296871982135984,0.7525178396871037,0.6837639309189545,-0.35651405845382084,1.041756662451721:0
-1.2269462775445918,0.6963878975162757,0.6576393603038666,-0.5349309728520222,0.22193111245933303,1.2965428962936323,1.735736061452042,1.0053135576151113,0.007480787704098204,-0.5402498418664948,1.0669542417042386,0.09674714913685595,-0.06296360350521389,0.01556068061289537,-0.6411233459203447,2.128472905032841,0.7744521147363144,-0.9772676168127957,1.44744653163914,-0.042857341385915744,-1.2880503086435302,-0.7264967110425492,-2.167130991420937,-0.592591655236251,-0.038079786847803505,0.14347550340865528,2.0564395385216403,-1.318863539848283,0.41568612242467057,-0.2839461627820569,-0.6833817115504767,-2.1313347329465975,-0.159509293004204,0.9819324563938169,-2.6798027019417088,-2.2620365217776843,-0.41369798352189757,-0.21678546012191244,0.16245419342062886,0.12949156511162901,-1.5893924507259656,0.4197597409712708,1.1958417737698432,-0.6818424878639414,-1.2934172193312405,-1.3364981558384306,-0.10140407871915486,0.36611177061019756,-0.7167634576858966,-1.3469132016253136,-0.009828013573745962,-0.15374725271379902,0.4369299097410787,0.5028924093976114,0.7211920974640463,0.21404245600322616,-0.018884688727578237,1.664848190685169,-1.0408040204529359,-0.38853442493518675,-6.195138152199087,0.951553912333332,0.3869018869473423,-1.025490520168469,1.5791399056045785,-0.4546356993826918,-0.49886371273628827,1.0670655970147138,-0.941198722773832,0.4080148793414648,-1.0766757820311932,-0.11309540072088241,-0.1717086085402659,0.21355205002002625,-0.8241016696574079,-0.2540002597240797,0.4234342018398482,-1.189857690180974,-1.8573296808576827,0.30232836770983623,-1.1535690984423024,0.9780279354304827,1.15732960950795,-0.9029787939882432,-1.0502041918261378,-1.306700871667976,-0.2961601944146171,1.6911034192957892,-0.6645430653052568,0.9364744452577366,-0.15349685893941764,0.5403910422555923,-0.48122221042661223,0.1556666030068754,1.546960560568764,0.1471669127229505,-0.041148246031403136,-0.6288721828598091,0.6072850591653819,1.283583943658874,3.432770217473014,-0.5777262735212674,0.9351633519636355,0.35248652380871026,0.7848626462805214,-0.043920327633254916,0.17914766153830272,0.11929872437375556,0.91787659887351,-0.20504453440369433,0.2299132302344774,1.2367731893657161,0.21682295688717076,-0.17753645593805717,-0.11804003857191998,0.2382222338043623,3.4727210853694084,0.19796392587802755,-0.4478768857561304,-1.2736430402448007,0.047840712994058385,-0.39987675420962804,-0.15252796825081522,-0.6118747638190684,-0.06735678518792751,0.4006398574064687,0.011068568349316054,-0.5532021607175038:1
-0.5936237584355843,-0.5077530139082769,0.24724878598360367,0.6290717911083753,0.5994607100717012,-0.008455399736363192,-1.2855545700239264,0.3121607656098621,-0.4425667842805821,0.415973723561323,1.2862078089873004,0.04192476660008051,-0.5145485270836057,-0.19012121292237566,-0.45298324270962165,0.1406463418587657,0.3460603822532277,0.48114973046247445,0.6045424692336384,-1.1949015113839097,-0.7420494549032919,0.33550855969128596,0.4162507190512903,0.0652913815243649,1.0928746616266243,-0.16741314941251653,0.4431973995867616,0.8164655749885695,-0.4092079911775153,0.8789828383096143,-1.3619848643773296,-1.833441471313509,0.41325522021091204,-0.3385399556934219,-1.3307394977001987,-1.0059897044427273,0.06564998493955207,1.226437379162671,0.8150512830511409,0.29283507618095717,1.0079415410402277,-0.23886629277557464,0.787745119182359,-1.1508021733519178,0.3028669529128763,1.2190634726373926,-0.6976963490789044,0.4846095884100914,-0.837489423355708,-0.1740456009293707,0.6644540705526863,-1.5539119991016088,-0.6145998004676368,0.9650963354207622,0.7410378818964496,-0.8924121281392438,0.4077351423220528,-1.8663518908024315,1.7900512785059703,0.9637072693937108,0.13953769363032809,-0.34215749306831467,-0.8618730554078733,0.7648046532763656,1.2771878751509265,0.3016122646486553,-0.5528132945501749,-0.3460077878798509,-0.002957527124804563,-1.1260293394779173,-0.35711448097763077,1.430828154869343,0.5561022228194172,0.216063839023013,1.1840182364357363,0.05920581517774034,-1.5779617989445,-0.43848343335997325,0.13113422058264296,0.10520525703965744,-0.3457173312122781,-0.21379101639323492,0.48872389385702963,-0.6993316931004641,-0.1837013024270621,2.275771056962566,0.33495422240030487,0.3355381546312511,1.269106407191228,0.09880212930737269,-0.654491883848548,-1.1773396667081846,0.32582920975191426,0.24105438003494617,1.5307984673094108,-1.9958761520750228,1.656876346095601,2.114599456179766,0.47501402356883615,-1.2590444348025909,0.3146765136199789,-0.45004738825466156,-0.6420904648611917,0.5658607127485447,-1.1657962584734916,0.52400573249686,0.07750275119669237,-0.3515165012242218,-2.0870792926327684,-0.6038797912371077,-0.40315594627759493,0.15018792855448765,0.035238785198282184,-1.280090805194169,-0.024867739497822425,0.936723758840232,0.45198332488640575,-0.9896425201582865,-1.5023036144377886,-0.8221997027034431,-0.197560197686785,-1.6793988047761874,-0.8791573650895452,0.0015943058541802609,-1.240259934051762,0.3224629587755047,0.30113116742867974,-1.770414512083966:0
0.2585558916922137,0.5124625210519256,-1.36893361966719,2.889254430564163,1.5287744826976346,0.7655393826268709,-0.5830643464636881,-0.0728259107873813,0.36343996274587964,0.4464329489777758,0.585521982498426,0.36056224331896347,-1.9021974081590758,0.36922284700619706,0.027697386414576603,-0.24028004086711477,-0.12716507742327585,-0.2518925366525955,0.5087667950991396,0.648656974510266,-1.4973471172551902,0.4351841675348777,-0.14194001609418141,-0.9842032847160607,-1.0237120089398601,0.36749672540035017,-1.0409610962571145,0.27209450697435444,-0.11341013684311095,0.30393470316397275,2.116425010841731,-0.22574220518133525,0.5163522040455311,0.05766488773688126,-0.41130139740393257,0.08246060175484062,-2.4452803828387197,2.6131193202674687,-0.6403000012447867,0.4970777893583984,0.13052608757100975,-1.9506080784225415,0.1250919572229017,1.8175640408731053,0.3732156426569959,-0.5842679459335614,0.003367100368159076,0.10972577114529167,-0.1649583202268042,-0.5414545555288874,-0.2203102114476134,-1.408997473879335,0.03370764082773989,-1.7093467204005135,-0.49145414139828014,-0.07743850772344596,-0.6856700756512326,-1.6609277932697704,0.41205302752775014,-2.2502910814886734,-0.7360479129089664,0.26232972924679776,-0.19044792649834968,-0.32648692660651224,-0.9255883092859697,0.06872539427720906,0.36807645695140945,0.2766336695441355,0.06153970556304996,-0.12567141938454543,-0.3262729286117696,0.3311831312837436,0.0020640313636563564,-0.1776604784985454,2.1541859393056395,-2.081331301586468,0.28035132503309,-0.4112675657483229,0.42279643423763397,-1.8691268818184763,0.2654514188058627,0.47622393467860435,0.057265278160425946,0.7904308969728482,0.551377527745062,-0.15902265426150114,-1.2402464935294943,0.26775909017511423,-0.01586154051374222,0.9788708925028442,-0.6817503195307216,1.5128574591022903,-1.6714254027971716,-1.2946875822682746,-0.43716463135210076,1.3425155078748712,-0.054771416265933535,0.6149367003832386,1.176139595522733,-1.005580490685878,0.058894590484061635,-0.06371255566317316,-0.5066976666171394,-1.4045398506814568,-0.26371961657423015,-0.1985088683619483,0.7644460144793879,-2.8033865807636036,0.060346253628545524,-0.31407141455060006,2.063539300797078,-0.8670689345941408,1.0522314414266667,-0.020646755023609898,-0.8586191052550778,0.9936979875761417,0.01580354231362375,-1.6472300036843677,0.1358160772992455,0.7532623372320266,-0.9206717618030739,-0.4687216381814545,-0.8436053153312607,-0.1224090603863292,-1.373706564399535,-0.33563308775180445,0.5543238465013524,0.4578295424986779:1
-0.1389290535291789,-0.2714374071029572,1.2449842527124066,-0.24072193655802288,1.1528097967577873,-0.6089671037380552,-1.7570767029170182,-1.4539817348516166,0.029235792553645258,-0.21922198302070514,1.263925404619841,-0.06750373249990736,-0.5279231527792918,1.582111750000968,0.07246367781619598,1.007194991122528,1.8730009714495326,-1.0872400272530887,-0.059800076477764474,-0.387675564937074,-0.2819003132191709,0.04413402335797756,-0.6897683279180457,0.14473890249404772,0.6674008189575104,-0.42388752171519634,-1.6983941715239015,-0.9822237964915259,-1.7320867368623445,0.49298354201134525,1.206614265010894,-1.6688165773993218,0.8297471780387129,-0.5319868794495052,-1.1494469106152037,-0.19975838513595848,-0.1681505093584031,0.695331236401399,0.35475952278053974,-0.010992313512122926,0.693165934935289,0.2691596785526579,0.803006722018968,1.6604550321837392,0.9734440173026915,-1.614586816636704,0.5435244307918752,-0.6849111788827645,0.3899926031304233,-0.8206371579202847,-0.45245052357691423,-0.04498413182284707,-0.08646223613913645,0.0452784760105423,-1.561171707869125,-0.031802679391888126,0.6523127334058423,2.197356648665127,0.21318304276994263,-0.29193156647140917,-0.31353070337443767,0.3103648863903014,1.575851106189316,0.7742664841661374,0.997728441589213,-1.1404137458131411,0.22075640145465164,-0.8460511001556832,0.36554201568047007,0.2686779569229494,-0.7847005423801843,0.6053031495515065,1.7003012777683764,1.2322805057533988,0.5185233928781654,-0.3548723256683623,0.12461274169234218,0.3894079912095447,-0.4875447521515122,-0.0772129957147503,-0.47898692398366477,-0.33661761761396297,-0.8847255824690315,0.4903160819593205,-0.9801588204401952,1.187323580271805,-0.7587419393270326,1.5201942484176059,-0.3581937630937375,0.3900285876951845,-1.1691462045955912,-0.26123644745438773,-0.2050468240118382,0.04129245996286413,-0.49892567314821734,-0.6257629667959583,0.20860716288427542,-0.12424537786189643,-0.9087504859961044,-1.208051651365208,-0.249205663513811,2.006278521893117,-1.314787714308982,0.1596026203036035,0.3117864683396376,1.3117838532620671,-0.6274538389387411,-1.5189266210631513,0.04106693348753867,1.9174192382212591,-0.0699174180337164,0.8199913357014083,1.4565116900369173,-0.18008409835900785,-1.1683191106669124,-1.6241625247249103,3.013344753206836,1.9063128959347517,-0.6473468730343783,-0.5362292680023732,-1.708166044001685,0.36231056051315647,-1.1451622850421983,0.18491151259502778,-1.4494631420884083,1.4304921611229962,0.5176875321533758,-0.23454180637249314:0
-1.0607149393899724,0.8692353131985188,-0.19081832836793078,0.8528053282500317,0.13946462326448758,-3.623397265612955,0.10226292783784956,0.4141758310661339,0.44929766643771696,-1.0440396778662053,-0.08070575765292272,-1.2786232192993046,1.0910602251894852,0.1942966239877467,-1.864692006645727,0.20292863673665223,-0.5940310612970275,0.174610042507811,-1.8312550455914884,0.5485006384063768,-0.8495248268204353,0.3480181500754105,0.4198006374443092,-0.6639927829970179,0.5118616928105042,-0.30907801189206857,0.15328179037352596,2.198178269143914,-1.0186647383619187,-0.34370575088650673,2.2410950310572604,-0.013832647930335416,0.055657634267865,0.030410562080129246,0.010871002439396345,0.5143806836131891,-1.2154229663618166,0.03061957651831285,-0.23169612098357784,0.05027921444957814,0.1603872327967205,0.36750893629103637,-1.5607158956803224,-1.2308806214965469,-0.5791460954177396,1.8191169662062512,-0.0023940377394931554,-2.0635818258639897,-0.29119510318937525,0.055445797520578044,-1.5740164618182289,0.3624280401619774,-0.8029613462953255,0.4212928433263694,-0.29934630018735664,-0.3162896629264822,1.3953719381433267,0.5807648934684361,0.34672477950495656,-0.13271784856980398,1.60267351123004,1.9819464382280756,-0.10640191001304643,0.0889930744464299,-1.3140824872678785,0.11877491952463742,0.009105801589982311,-0.5201996935969437,-0.5303991096031196,0.32545511261577864,1.224885133094228,-0.05772671791407875,-0.24842857016952047,0.23249745091592997,0.3385343906281924,-0.00919437563233167,1.5154243801015823,-0.6989496265715891,-0.4943246223190007,-0.2525165443392247,0.8963831095382537,-0.028297696737271127,0.5179045800564839,1.4609996160884813,0.10823786032468342,0.9142126430479534,2.1107140620345106,0.19028658398362266,-0.37998534394597333,-0.9776296444106695,0.6717955079056285,0.19847204454591333,-0.9757033580018505,-2.4058039434769336,1.0033993446929887,3.754345108464257,-0.09659623139932981,0.07558802623134313,-0.018000276475456295,0.8167288103920866,0.6289510147775439,0.26865037471794406,0.4213283109918403,-1.5560813575918022,1.3281629542081599,-0.48963880553796024,0.38302069985776,-0.2533617782082396,-0.9519002779881527,-0.025963576123179982,-0.7024703151974442,0.11399346077173098,-1.8255740034162886,0.29565192868412904,-1.693870545288279,-0.17128166423774496,-1.8390556936465567,1.164286319505887,1.4522476839187766,-0.2860520006476217,-2.5826133216992195,-0.11312210992545498,-2.2278855398107216,-0.9097365950548515,-0.015475176636061,2.3550385653653234,-0.11410705061537339,-0.39978371837924737:1
-0.8514300274160361,2.2275819111080177,-0.9256520792224316,-0.49022170068879817,0.8045496466015339,-0.4414649515372074,-0.6688442096995757,0.1529769257448609,1.306204465926794,-0.5414541495320833,-0.1332482404154668,0.8515794889699364,-1.7227846576488237,-1.3137722538948522,0.8049013189803667,-0.8773185223186803,-0.0349187592899844,0.021976091932647226,0.35697570917850396,0.10079486182980095,0.7828626791801746,0.2729815657730016,0.03397119905031073,0.4233409932410629,-0.7209556176942034,-0.8937618628601657,0.04046881867262172,-0.2541084023828228,-0.16326667679175627,0.320956624333198,0.75135244335569,-0.9708547250551006,-0.8897832371348711,-0.5952742744934267,-0.8863087810280567,1.6241589265062861,3.4087133332399286,-0.5036132166904723,0.5265066356289219,0.8777232934620677,-1.012616577018197,0.6981599611946606,-1.1817547223393357,-1.5924382941087845,-0.5344914460802471,0.8541002196221905,2.526645410536719,0.025120969820691272,-0.17023394453812327,-1.596158138276316,-0.37188115350358475,0.8501243386409683,-0.1168118143590001,0.1957793525163016,-1.2197560569325483,0.06909991932873512,0.4598930443426714,1.0296048098719635,0.7445482844947608,-0.5546600084215175,0.4113249435257526,0.5962551818193039,0.5474287065084759,-0.5781735218806658,0.2826541126364688,-1.4908271745661743,1.188928621146643,1.8580187674653186,-0.3009541471453666,0.8892014903123702,-0.1722868908748094,-0.32678861665587794,-1.051919820448961,0.37858512581968823,1.2576021000085829,-0.4462139770620149,0.05763128440449523,1.135522806080631,-0.3311738839975293,0.2901626140192628,0.7121504440993166,0.14243050604195645,0.1252902820547782,1.042351059349704,0.6548509331023389,1.3254152332958262,0.013924036530763604,-0.13870113217573196,-0.7865203685526272,0.6573796183334915,-1.2508811039099277,-0.011894643657672817,0.4227108591990878,1.529606113430769,-1.0033594072818504,0.6012981547184777,0.9568478184931535,-0.8226350159893545,-1.5807157165359433,0.6233594094691337,0.24387737619926617,2.397569919666765,1.058394925637438,0.13529828405058986,-0.8118357165997353,0.3961447741084886,1.2451074515694138,-0.3322014526278591,0.34583944142652295,-1.495659831699963,-1.1966005728946876,0.3109655041935527,1.6432110461838934,0.9259330935996603,-0.7879879855813003,-1.790279657539322,-2.0582907982896663,-0.13075845712832893,-0.4365167946913316,0.8661989521513791,1.557690526053097,-0.9348674124179487,-1.4651161395614851,1.979289204150002,1.0340230717924621,0.07380965003642594,-0.8647107672580259,-0.7119571592192805:0
1.6665048092113761,0.7900514676253605,0.13228801291813433,0.12314313956122307,-0.4139833504763643,0.08465708369779691,0.2545722667776458,0.31481965780592985,0.1673329913127147,1.5126182621703317,-0.34141691334475116,0.04227433153993558,0.0004912610568873788,0.07661512041779464,1.19429551181417,-0.8642244818359968,-0.9122521517679826,-1.5710766904776448,-0.42592429496284,-0.6293300159737278,0.6506651423653398,1.2450539024819007,-1.7018310809834367,-1.313571513044325,0.07286322376970748,-1.515079293222376,-0.7412010388083489,0.2883207270218749,0.2512327059657168,-0.5490821029917307,1.8300869925137049,-0.12944038126042148,0.07551732327013937,-0.08933333404012661,0.46194689601122396,-0.25785706100291633,1.2030542946816738,-0.6696777906264921,-0.18731639365967365,0.1249294127921873,1.1818654916764817,2.448725916087161,0.6730673120350726,0.32233508753653833,-0.16308593417066897,0.35745487470312554,-2.6294540768800876,0.7326479106875341,-0.44237430908525327,0.04797988481107608,-0.03672737013995668,-0.5799020388251338,0.40659547203431545,2.232536686199793,1.0118621237290555,0.9402252339212664,0.08647580519166541,-0.06653245180728974,0.034947194135257056,-2.2282211837695924,0.8621901313082848,-0.8533780688441979,0.1736427262461514,-1.7912391110084573,0.6588543846472755,-0.7369696322079653,-1.0002068552398142,-0.028981381369914606,-0.3759639576176967,-0.2762726490049676,1.0085364362332596,0.7015816244315142,-0.14415898033125887,0.08695905235204128,0.9630886364256012,0.6162613033909223,-0.23970738817683845,0.638630136375041,-0.07005010383594916,-0.34208950764754903,-0.7360936127319802,-0.1656509549245827,-0.5350575082326607,-0.41703154381722546,0.45470912889308274,0.043615365551447065,-0.43889665360135666,0.9646298313063849,-0.4126255957582016,-0.5704530760791733,-0.3365254754044202,0.31343341991302104,1.6745501430509226,-0.21489563037411755,-0.14024497197597244,0.7047739043364946,0.032709894168141476,0.4687631344602777,0.4410778425274145,0.36988778807485506,0.09709998806342125,-1.145489546531477,-0.14323260730494594,-0.5532879909234908,-0.07400485213725233,1.2942405567994388,-0.5750169207178237,-1.7865397668151344,-0.6643179208570938,-0.2751506632003211,-0.8119047716264719,0.24463311866204698,-0.0028683086594244243,0.19743413375628,0.14853132193235055,1.989360467633706,0.21818179043591615,0.2980889466666197,-0.33990013155874127,1.324658411885142,-0.04616583755674663,0.2948652621469246,-0.08809647166881263,1.0273564275763605,2.370980777236792,0.7431487683498167,0.16892229707214634,0.19226772828124747:1
0.014776876907600739,-1.741366158771501,-1.2084846592296092,-1.4391969593719545,-0.07478799034522393,0.7609596280632556,-1.3775215987824536,1.0052419178679723,1.1090883262453402,0.5671066919751416,-0.8378600461043398,0.6225615356722864,-1.2072697726382562,0.12898221421106765,0.678363936486338,-0.30601287412272693,-0.5163729030440208,-0.9463728944544313,-1.625006394604852,1.4918444557148702,-1.3034605359849007,0.01672009281245602,1.062316845077683,0.3924767673491893,-0.7920560107194717,1.3078772841926734,0.9153667123147579,0.16723165668640555,-1.3402834490045201,-0.8709293348237862,-0.27684049563568736,-0.21610543950876104,-0.7537446953950406,-1.4154555476325033,1.2163877725419912,0.41948120341537054,-0.8904411160155193,1.9344533260195664,1.5189957466276247,1.1897224634089028,1.1106826116299322,0.4393643734944409,0.5842549157207274,-0.5372830075050573,0.7648645415403413,0.1576155174456318,-0.5634749117837069,0.8610738140413174,0.10676049898488041,-0.4578007124100861,1.8156042802672856,-0.7075022881139005,0.0009330495174529435,-1.9155931325561555,0.43885277097722825,-1.7575915909790987,0.13782723393921584,-0.447522456452685,0.11279277226120522,0.6530295983848652,-0.08265180066241866,-0.5062269437751546,-1.8857123467958454,-0.07645464983227865,1.833563437335784,-0.2999917865588722,-0.7702106410666827,-0.005117372007371989,-1.2414394611773492,-0.9360154623351087,1.232782386140044,0.7649169092633784,0.2486781222238854,0.1075721093825662,-1.6571451732665423,0.48809357785064483,0.8042428865911794,1.6909557998626672,-1.2899056722114017,0.3408046366233464,0.7990319072948557,0.24848138359027652,-0.07279266281737275,1.0580101356067875,1.409821039731716,-0.7492771434573484,0.04044893296784888,-0.6692626025005916,-0.3721215332990932,-0.10560857163121014,-0.5539524050014686,0.8500457154050454,1.139277902114455,0.0943449904823804,1.2205315227871063,1.6407708383113728,0.006140339809862847,0.23633542205372807,-2.903108461114769,-0.23871555129447464,-0.18463643734574997,-0.17446591753653373,0.5934630270130756,-0.08594102297154098,-0.18125061593565991,-1.6329699059342089,1.1819520399438075,-0.3030251732300457,-2.1184282140007493,-0.28291105742062894,-1.0342100195574262,0.9769240315574972,0.35694418184866605,0.7534910639815875,0.1112727877143464,0.15206313017898643,-0.20924192461228627,0.5386491778460348,-0.7274035642518119,0.7311246315601385,0.5266169456464439,1.3365871686871638,0.38027837731591424,1.028455242731686,-0.5417497404833981,2.538851749873715,0.8419975668137456,-1.4996103319764371:0
-0.509594817857531,-1.0565213513363507,0.0961086710811411,0.33300499657257904,0.6119677271982342,0.30066614136982256,0.6197608326094783,-0.5404126467026131,-0.5767375044614966,0.6365676420159732,1.2817181698080575,-1.1257125665299073,-0.3137970271740533,1.7288991758740166,-0.003578411013311772,0.6202460580082118,0.8061322160746801,-0.7238863909883726,0.6083786050563466,-1.1676169755004724,-1.8318898390268703,0.28880363032121514,0.08821773745488136,0.5837382188711531,0.5125089244914666,-0.7568447907132427,2.4788240715020655,-2.2064636264983397,0.40126245982446374,2.2127350517316473,0.5600368264435721,-0.36822706944625727,0.00492340937443668,-0.06442686158560716,-1.0773709560581466,-4.017023401063115,0.5880410402172181,-2.594037146624161,0.34486023650151093,0.8070809689416694,-0.7921762603018342,-0.035208870407011796,0.17375914189159858,-0.24731047975129786,2.6398340458095966,-0.07283679635247269,0.7825592707735093,0.02439485361225677,-0.5971271175905487,-2.178806027025126,1.3877706707916608,-1.2903371711886267,0.1573864740362632,0.6690763785831809,0.9475096311696803,0.8469843347772862,-0.14371155188842988,-0.04369449398675942,-0.3579871022298297,-1.660048832290473,-0.36882861553191953,-0.3804508357373232,-0.28072609224442996,-0.7848363777347876,-0.12020300482006024,-0.475898367210725,-0.9823671916493812,0.055831031675676566,-0.828122895337623,-0.4664466156238556,1.6637799789685124,0.648033667199168,1.0093458136829785,-0.7830972148036267,-0.9444464478418076,1.231743288642318,-0.16412463536435937,-0.8761251095006213,0.8942460697892142,0.33673020422652855,0.35883066125306234,0.49629281144960957,0.39394776245037,0.13284121116970243,-2.283904455431021,1.5488445549693481,-0.6447461567213237,1.5423079075276236,1.0898877780930931,-0.6592932399841193,0.857360330198893,-0.20338237806210308,0.2877633995803968,-0.8358332300793958,0.8440332553165788,-0.9467826435094933,0.8916412093137194,0.43498059540586254,0.25137667003516084,-0.26407985878469814,0.40595929151202476,0.5824305966530968,-0.22256340486091908,1.687690708963853,0.6792773181888198,0.4349462862464625,0.25606028659068963,-0.6707056748448422,-0.8093714975766978,-1.2816800807478361,0.9515507996823535,0.5250993222920408,1.878925894225274,-0.2407782109654327,1.7002756096930343,0.8800158257601568,0.47593775712997843,-2.853265086640181,0.535494935184721,1.4557712120042854,-2.060541793942365,-2.228896835401972,0.22094848114436208,-0.35491035044337677,0.29447808738754105,-0.163713275445342,-0.6282103102030779,0.27237002027625873:1
1.4370269521339083,0.65464502324113,1.868760393616706,0.7770372166092447,-0.05099340792527515,-0.9012900444111642,0.6442380381871017,0.6551776521277108,-0.921952183324954,0.21017686063007093,-1.4202218491339982,0.9369369329096577,-1.008771422161687,-1.3063417019899946,-0.4462864842558954,0.789196029847036,1.1440309344186272,2.0264481135762087,0.6752709695033512,-1.3254779582869298,0.19433379749875246,-0.1108441550939124,-0.4611204341704508,0.3084458315040828,0.7121789837341105,-0.31656451448901307,-0.1290081979576996,-0.2953691821253292,-1.0745103201409834,1.852143671325539,1.2656344995577755,-0.7214416180624434,-0.4568727508402289,-0.05975656199827187,0.5139167002299608,0.5831175937248744,0.43712494827558684,-0.14984987761202537,0.5976651038142619,1.3783838751731992,-0.7940697043565476,-1.7182175486913867,0.027674405477109216,-0.8653788563739571,0.2683900301721247,-1.2527745394277443,0.7394742801758303,0.8009392674649606,0.8058404539448031,-0.8886946380282753,1.3150524665464844,0.6260822333509932,-2.0249658425722425,1.4204819180992176,0.6394378920355339,0.017712577589313723,1.6782012707316913,1.5961229142251083,-0.7658666583304217,-0.6310116152152824,-2.3446863961656,-1.2343721372332837,2.0319086889468205,-0.040409266998618944,-0.46917872109357045,2.226184697568067,0.2727183345371039,0.054324118565625565,1.174447203352336,0.59593873218557,-1.852104188734219,0.820461226970445,-0.7672020220600287,-0.07605124009168168,-0.2716333358482788,-0.03973333889481572,-0.1713930173948615,-0.6336576609056893,2.3756721747323635,-0.25719221690608235,-0.0060812196489585055,0.7829557729507108,-0.6025117488079095,-0.8160375692602221,-0.10956993505926067,-0.5061224248503718,-0.3584789139244092,1.370127341936921,-0.7191021616172832,0.05668278140394683,-0.6779936447617065,0.4740631515584281,-0.9198063456597878,-0.7043508480151484,-0.22195401316579388,-0.9499586166838513,-0.5144262001153536,0.1843959778547367,1.3709946740794703,-0.17296176967221796,-1.1362802432891344,-0.036313639064515846,2.124170845116021,1.5546612625739296,-0.2527671629430587,-0.3572909783774888,-0.3435799201382676,-1.2593731448132974,-0.5651591066877052,-1.3525848594120546,1.0954760571735946,-1.6746100505669401,-1.5546520233318,0.36740780780480353,-1.1066798922974999,-0.5194854014061306,1.1987814996257131,-1.4208998276830995,0.44501492047263025,1.572864850252961,-0.4735611310076638,-0.9700169456275202,0.11437554789607059,0.8976450117842044,-1.764060971942326,-1.9561904189984962,-0.30852557829731675,-0.10301474915194372:0
0.004084942365121832,0.404430565722426,0.3191811269200725,0.8445578288264524,-1.1089514992639598,0.4111297476220406,-0.64098467256003,-0.1299076319489529,-0.06179322350373549,-1.0650601956800272,-0.3235714990111557,0.5122673562829585,0.4341454075176623,2.121884258604429,-0.6078380275084855,-0.536962256622099,0.23001621110112974,-6.000262476414249,-0.8882745973406594,0.8066370935807534,1.8573927722370032,0.24631954907496373,0.49031553695438046,-0.1310366803457435,0.14957606832077802,0.38952228516077686,-0.8404606943839638,1.5629498762733367,0.8414309840244947,-0.17047859964975226,0.21655970441032968,0.26180471878668804,0.4673607444329766,1.1422969293926573,0.30520856470850355,0.10212859839402211,0.6578761640053388,-0.13343791839924607,-1.5574246433518129,0.5656292568004107,2.5482083022442725,-0.022028592090707476,0.7726289235321788,0.34307100624537995,-0.9887132537502676,-0.5764409453490654,1.154443242338225,0.9258940034118415,0.8314922240265318,-3.2853712849948686,-0.16145220029220803,0.22884446104603617,3.441255522529671,1.2688940659461623,-1.1648497366697586,0.6609307359121723,1.3001311578510144,0.5007150825297598,-0.5882094343241677,1.7424944876317139,-0.5538754156949429,-0.30612169607481543,-0.15234699609981858,0.05265562175829158,0.3563990427886448,-0.47152834981792996,-4.144789390113052,-1.0656694617578666,1.3062873889064603,-0.41682196684735495,-1.6398001442236882,1.5179791326386265,1.303350100538519,0.3503616229307598,-0.5362272418323296,1.038235800792477,0.2953515540047668,0.20793698130071236,0.014961944848600868,0.10795076113023615,-1.1994274559024167,0.244167173961926,-1.1071621235439937,-1.865269152583923,-0.4395846909084439,-0.8032602652822014,-0.013606691385536992,0.7461787578269586,-1.7634046191713328,0.5127858349794865,1.353682300375648,-0.06527068780229664,-1.7340568838970298,2.090235166659889,-0.5745534542758454,-0.612477366412884,0.06698468215426989,0.306790837942462,0.1889936748958926,0.49827545510536975,0.16573710776350198,-0.42374323645040984,0.01034402454651618,-4.039277165482868,0.7390075150362284,0.4472249488541548,0.775240352731622,0.26351764963920843,0.5519619271883653,-1.1521548406593463,0.13445025620624176,0.3115426239709609,-0.4260855079029157,0.04253997893394138,0.13350435962163912,0.765722694271519,-0.14606891698762284,-0.8083099875261059,-0.4299011232559374,-0.14073921306368584,-0.023614773469890347,0.08144721786754847,1.0915930243192202,0.0928616463794985,-0.5554200320639774,-0.7467670460129223,-0.2878239279537784,3.2233062587106454:1
1.1840503988542925,0.7307194306199059,0.13955912196616552,1.7563442899002826,0.5577215262439038,-0.04868548241816582,-0.21100921816234325,-0.36440777091784093,0.09331334789920245,1.2461478700916453,0.5638750596200963,0.9454386861136973,0.6448233270642838,-2.801246749721968,0.6128519302334041,-1.1787190842779005,0.0692337987348045,1.580139471859564,0.7240074013120575,0.6695565550570071,1.11735222127064,-0.28957033916607583,-0.6672442565430571,-1.6714597613982063,1.119340636841304,-1.03167924990895,-1.4704051081354192,-1.5479089276296336,0.1679249648094418,0.17863846292344612,-0.450926193481888,1.5224692949626044,-0.3500128583495361,-0.9146938214956418,0.4642010816893895,-0.03493645800247828,-0.6107585313506457,-0.8275609164628136,1.625907083151129,-0.7819972788927475,0.8623797235791776,-0.2061755361971506,0.6462091594611282,-1.4610465590990585,-0.749422376374646,-0.7250857041255413,-0.3346365839717204,0.01706396800355898,1.1173831357411237,-0.02818890056053487,0.8399700924612976,0.47739741548882153,-0.8967688140365748,-0.9246882950970206,0.21714677910993788,0.3729074575218929,0.7569940223213341,-1.2069354499590619,-1.7175978136077419,-0.5097719659799492,0.577700476436288,1.7729837954857386,-0.6207517017122264,0.15119691719091613,0.06859964837143287,1.3081970688685958,-1.357567411885591,1.3392225735762469,-0.6834834061765211,-1.7478246139469258,-0.03226701471865508,-0.1088351606761092,-1.3262356173276255,1.889733143350714,-0.19441061937236995,1.3703647241043222,0.4332061024258945,0.004893680788451095,0.15781675574641554,-0.9425741883294735,1.1207229869546826,0.02258182624486001,-1.2763088872437283,-1.169967781636171,0.03023436103875147,1.0881504911671622,1.313439467975684,-0.30034152667304315,-0.178408242228609,0.5801671617331859,-0.5565916906571776,-1.3335240176965562,-0.17835043002093673,-0.541603275553296,0.722621398321117,-0.4288793684454035,-0.8774065315654392,1.1715660807200037,0.4543284596886582,0.07394213161864774,-2.0158364985799944,0.2147584982925643,1.0259782863831715,0.06109782564036542,0.36094565987824284,-3.0131079086398613,1.2787765378603355,0.9387795501915762,0.775812967274477,0.12373713389273543,0.18987271441131337,1.4486277073622351,0.6087116749387346,0.25232620379814097,-0.030073635825559015,0.13081063392458764,1.825095882789398,0.21583714513905725,0.5542643276284883,0.2649337560951455,1.1807854802851654,-0.2684012480021116,0.6509965904009893,0.1461449862255102,-0.4920519932920277,-0.03123008979205788,0.7654882667081698,1.9876081886409604:0
-0.3804174079444459,-0.6395895484764372,0.11714689541594205,0.3001507102511045,-1.7791956340472328,0.21790550831557196,-0.2104049240081445,-0.606603830895327,0.27627919921631255,0.23344879614633568,-0.9204468931586025,-0.2850931993306186,-0.5793149578825735,0.3044942711825057,-0.8846789907248583,-1.5722653513275842,-0.5054447830051728,0.1145690207881861,-0.7251708000568049,2.078623437549444,-0.2769048256950852,-0.8846813516048738,-2.366754839052995,-0.6947409201764918,-0.13060824965809337,-0.6797796419330229,-2.781583588586469,-0.8706359013485099,-0.9811011368908642,-0.4221865273110376,-0.8111734304736672,0.2345705165174738,-1.187430422181094,-0.012228863154743468,-2.1142783301641277,0.882914042770443,-0.17028998546222676,1.637919798863928,0.32827021363352804,-0.3757005639196807,-1.2112783440650947,-1.6652720352646115,-0.07362281818343312,-2.3539323807816155,0.7389390682480148,1.622570386529045,1.4838916618980458,0.052240508651939674,-1.5987808436535196,2.649981936447144,-0.9225810618414293,1.8412290048431121,-0.4329956817842275,1.0965889704033271,0.2129346646090427,0.5853554430717475,0.047639836278823885,-0.343651056118836,1.0855782621986871,-0.04559953482603484,0.5683475061122522,0.373409436836077,-0.5334788816686661,-1.4852259081625023,-0.6748144871690531,-0.11155323988321164,0.2562647346637632,-0.7660859773623775,0.2488930616544395,-0.9499753338554209,-0.6814521164472387,1.6763798195593698,1.1522982507782111,0.24734834063264088,0.33424522342217156,-0.11024250135630907,-0.7339040417319759,-2.2901497666603086,0.6687220191959017,1.0696479943588706,0.6155907938222318,1.6259781772891775,0.6657588321479622,1.6204697028365314,0.20574912229397055,0.38570581232530166,1.1802755113725336,0.32172814968156904,0.3135097497564972,0.2368900949932714,0.8608522162223662,-0.7710987139881615,-1.0264044557087448,-0.14218987417762216,-0.02277319698006864,-1.2811134355299623,-0.6908322096880449,0.7084335053177933,0.8366610383133808,0.028415226131288565,2.0081283379839707,-0.6672758524065779,-0.2168729987983651,-1.4148475330026906,-0.9847872930275572,2.172107262022794,-2.1554064137774986,-0.8135619360690777,0.6470680904656944,-1.5276657019524313,-0.5909723528203309,0.4068772626731566,2.513866583015976,0.2962962186382704,1.4378314467455127,0.41466211857236207,0.28950007198777045,-0.15975558938394302,0.7964146055485175,1.8504184170327282,1.2450560501625947,-0.35974769033195847,0.1716448471267058,1.6254144334733613,-0.24325039434202309,0.7925185747883221,-0.19074303926334965,0.9385774018633258:1
-0.38164048432597925,0.5599330502649551,-0.971219720120822,1.1093748243159134,-0.18200715918267563,0.3449654220854613,0.7657439842773176,0.5133353923768901,-0.9037622654241051,1.549396286477638,-0.9156624535872695,-0.3730397511802602,-0.3629297972823653,-0.32745701614333844,-1.1873215176440963,0.9243198542866036,-0.7583630089868821,-0.10077147617199593,1.523786436453861,-0.11082489981231593,0.8185376117195348,0.28963861381882067,-0.7241587091263845,0.5522844080884005,0.45674303841266145,-0.5703009403903824,-0.8315983293952792,-0.34447366294480675,0.4921922408115879,0.5015549891679443,-0.16208835806603236,-0.39513969796345877,-0.3328719912572142,0.695332796464857,-0.9839706621463864,0.06195542358671334,-1.5059332508750902,1.5370458822782802,0.21340261481889167,-0.2410969150137283,-2.434992361828878,0.5198413868698601,-1.2669360110352248,-1.5624734325661216,-0.20695820728694547,-0.1895087456871798,-0.5617768827323054,-0.397899327166944,0.5712258907889634,1.2029964941152733,0.11147531784386226,1.7157500085998665,0.577905387813724,0.7813477493577445,-0.2776957653333516,0.044102818754929905,-1.1780391580885083,0.5079892783831981,-0.2829244984955905,0.7504750073661556,0.06401993462839833,0.019899703841630707,1.3102809528928063,-0.7472606141043828,1.2122247291418988,0.20145111735026336,-1.2234698726480417,1.7991554987741052,0.2838368700032068,-1.5324860070832271,-0.23797978378471585,-0.4496214678788241,0.013502288230757324,0.6421604196643222,-0.18220408379354266,-0.419242306904877,0.4814528305387152,-1.3894552347363898,-0.5545047121100214,1.35612476303963,1.8541739846549221,0.6582754766411673,-1.4956290627460196,-0.955988357506339,-0.42245938789615717,-0.05754555732596132,1.0952075855159416,0.46713088749210346,1.0434620916509267,-0.6657940555842428,0.5204782502978935,-0.43247672923657215,-0.820053191089376,-0.41159371510341597,1.044159653067974,-1.6423778553416595,0.5102895092474944,0.8126439037155746,0.28810197985842917,-0.07879258599779396,-0.732079644084226,-1.2758054965607175,0.8393826513512632,0.724233143161349,-0.9441042317304983,1.5441279814374296,0.03199579905296467,0.0952320017417696,-0.7046367814195746,0.004025763845952196,0.4495930746655041,-0.6308115476360201,-0.9216997837274179,0.7536145353314966,1.4782250344645504,0.9199664163242918,0.3341088139945233,0.7431086431999547,1.3732912746431456,-0.01704997203492049,-0.42109864792715496,-0.11916411469092164,0.267785824633598,1.3444418776379816,-0.5663774233985789,0.7710605239880204,0.13446931725436784,-0.6639410897477879:0
-1.2723936319833646,-0.49518510708839614,-0.7467916753947901,0.444925965204394,1.689589574629531,-1.9653706727202183,-0.06357283027769922,0.9502690540038871,2.2911527771497187,0.01661478934167257,-1.2591714257369173,-1.0318917803805685,-0.5252692758011024,0.40082076141815004,-0.23315937951485988,0.2148069527685958,-0.03975636282836797,-0.6882023792616395,-1.121546678834576,-0.5581337660282946,-0.1068012987630916,0.9692657382737841,-0.6181487406339217,0.143263401298763,0.7204980312067853,-0.8993008845815773,-0.24371721334970325,-1.8401274221861876,0.5116736807404019,-2.0977000725901953,-1.2785873046725198,-0.09593835399843878,0.2138261134776348,1.9946916888106168,-1.4810429476492009,-0.7532555593751166,1.6485718949868955,-0.3068888190451702,-0.5970212862003,0.0008355165382874114,1.09430934020385,0.0012946586339548675,-0.8482515920151249,-0.31295507305247255,0.04827859625671267,-1.1464329572741823,0.9653250709590746,0.10019425018056109,-0.35411096358627264,0.4293776133555548,-1.3263486370052198,-0.22895816088505283,-0.6050168091332976,-3.4193135253293785,0.2607070881269481,-0.17233488167856845,0.8811070850339039,-0.31891385265122385,0.13052181040230715,0.4507472921331797,-0.8179704628434761,-0.8338125945542748,-0.6690003385166385,0.6070655393649845,-0.0650084366912575,0.03176027139477509,0.5485072096139356,0.6475125094477466,0.375389870999484,-0.2772749060372706,-0.10547341234114795,2.1830906256661513,0.6807070605329258,-0.5113211074926602,0.9666047744750478,0.5014308880453621,-0.0907581188648131,-1.1724769186348314,0.6958368377317293,-0.18781856329891,0.22872278513279307,-1.4122185844028587,-0.7062490136380102,-0.6719465573599694,-0.7739002805497313,0.018057462493831975,-0.9731561466558805,1.3113769648869393,1.2181389687095607,0.01957768519646378,0.932656837925566,1.237220129225599,-1.1773695604524879,-0.5371157325033745,1.092589725863846,0.7942898663291645,1.2095087678312944,-0.3199553263380388,0.39850371253469685,-0.3850190599674036,-0.20795334537022567,0.36816896171668484,-1.282112054074344,0.9201356587073763,0.2128384251471424,0.013483816465007327,0.29467199246233833,-0.1252601026185246,-0.031019759633528963,0.9800771547876189,0.7610837579755492,0.09097939430106923,-0.8091359699021239,-0.6206041057024402,-2.595029934699506,2.0962097503862145,1.042994568955786,-1.7256910591776122,-0.6666824616954473,1.0196773943184734,-0.03805410007496564,-0.010535166699004827,0.5816397113080837,-0.7372178837675252,-0.40133778071411436,-0.07554938859358819,0.23498439852849312,-0.12079592692353576:1
