@problemName SineWavelength
@univariate true
@classLabel true 0 1
@data
-0.7862851922726479,-0.8843708152968872,-0.9671973236369195,0.22708717048686872,0.37667003684640676,1.7243485594576808,0.2068774624668489,-0.1531538457340954,-0.17981822698843114,-0.8123354728118908,-0.6867711435440268,0.16134092582636267,0.3263851732152118,1.4548371064273975,1.088398708413642,-0.7652622711903432,-0.9824636590790332,-0.5326625807933911,-1.0873405515701828,0.49170806069562345,0.46889221202824016,0.2726633473932878,0.4847060775102832,-0.06885618572018436,-0.6188845360673603,-0.9675899387398372,-0.3958048595055844,-0.2923907339801408,0.9954585892426028,0.8910857054474949,0.39177586026200273,0.11964999406299198,-0.35677013080769354,-0.526056326932922,-0.38544590491843134,-0.31181617752929597,0.3246053444065329,0.9317711429636037,1.167323359733833,-0.33669589044339304,-0.9481200842210896,-1.2652192154329671,-0.7552208697463288,-0.3570590237097777,0.9986659351933629,1.0859868988861525,0.8803039646056566,-0.35832087269495133,-0.027841164195906876,-0.9908071875831255,-1.1716653115495557,-0.034038158840842166,0.16871599996099335,0.8891171307781716,-0.07066206182930501,0.43114241474949955,-1.2168255293191383,-0.9320324649409186,-0.5270867402668324,0.13933882587430807,0.5149516210395929,1.4859371912767203,0.6552994547610568,-0.8161099557692844,-0.7281817661499893,-1.1717071219200335,-1.202315108094159,-0.12245322360615726,0.8056823318550511,-0.04106599430326252,0.20517181631196013,-0.07364092054711016,-0.8319967549086953,-1.0338020107191654,-0.8831104259857536,0.08165426515180621,0.9955011342348101,1.5059665845344148,1.0225737069850804,0.3994484761666498,-0.650949133743861,-1.441712168215608,-0.2531243713116882,0.2564536772172149,0.722288107478138,0.9513837393533565,1.3679992398399339,0.54957402896707,-0.5112217221617711,-1.0366617138857412,-0.6189254646201674,0.5381676661968391,0.7591829003285269,1.2503612559706314,0.9807389223374912,0.20998390953762475,-0.44265610283485535,-0.5931234834031642,-0.6398088857978258,-0.4969925699461409,0.21193784545655542,0.7607513549232541,0.7004343239872998,0.8108973347388528,-1.366617455839922,-1.1691819173957985,-1.0191492869528753,-0.3780737386189694,0.6600147341070832,1.2779072711442065,0.46878885738115744,0.31144677094171325,-0.972603014461964,-1.2322940141792023,-0.5855381589144173,-0.5454592005364909,0.17105509234664168,1.878457893014089,0.12062925772980981,-0.10424186675898017,0.02934923118464472,-1.253801043290903,-0.47265343678004224,-0.3116093504288983,0.4572646273110631,0.9122698550449693,0.45295256511121995,0.6999506437702439:0
-0.753344431844762,0.298477812046482,-0.1553433738990393,0.6300669596927713,1.052671238594855,0.947720053328645,0.7230649735335178,-0.1566472670025274,-0.025855653704536685,0.7750412348996863,0.5276417991849744,-0.33467966170705976,-0.24475005648451265,-1.2653488894866944,-0.8381489493834466,-0.38220682848281257,-0.33715006821490556,-0.6376682682895017,0.7897977624666617,0.40182879780064895,1.014633159033147,1.5696245730410987,1.2482413093822575,1.0913555759837763,-0.06827992800429344,0.5133243946425332,0.3737089516891745,-0.32737722411945547,-1.1066685408089936,-0.8244293310106068,-0.30337834385225204,-1.0081533316753837,-0.629971453414309,0.06287157393007062,-0.38631674241900515,0.64089037664723,1.1922777181349695,1.5709971183517335,1.13041528190451,0.16128263832138567,-0.4764921141326426,0.0339856912137957,-0.3130484085941782,-0.5677070533122726,-1.2786836665654766,-1.3300948783541489,-1.5409103416065206,-0.9017208094458344,-0.4557062509266458,-0.23263151814211772,0.59792154219216,0.40340120239930444,0.7209059225760944,1.2801514879681686,1.0099131882504064,0.5080662106782552,0.18827007538633203,-0.2695052781655747,-0.24480844140082306,-0.38331471269521816,-1.334950418405391,-1.5218801554501227,-0.6009750429692868,-0.1978169931690119,-0.5814534724384406,-0.17125456084470017,0.4523059880987948,1.0806828917863642,0.6045377410032312,0.9755831740018304,1.1476391010655158,1.7007477132285698,1.222171041577071,-0.3564335666383687,-0.8259207973922752,-0.9591532947234963,-0.7078938407490727,-0.7232499083568165,-1.2454260532722268,-0.8636075425724831,-0.6285490655344835,0.34414326349652796,0.7217991175712807,0.556574953557353,1.1040307403672596,1.2873390270604816,1.2059679756968444,0.7179846829738273,-0.07584166256159053,0.3070139457337835,0.744679252185231,-0.19363493788373842,-0.7899022168843579,-0.8835529629316001,-1.308977828346165,-0.17253325991544066,-0.543055254957604,-0.09541743613320466,0.35513447795574116,1.4953230118294465,0.6284922889758819,0.77818096975252,0.40812956825623037,0.8319200942180921,1.0284408799344198,0.14778526256822566,-0.6348649889071771,-0.9885137377684772,-0.8864562062846166,-1.0021396377272762,-1.1718357236607644,-0.6747044571986699,-0.8376882877134184,0.3426724502537916,0.515399285039619,0.3105324481320239,0.5532960769860787,0.6530447452958941,1.4769607195709713,0.5597141412380339,-0.022904869577316633,0.36602329259198696,-0.329840084401164,0.32023235728913735,-0.543395888688512,-1.4904271377270286,-1.1585486477967852,-0.628141930215987:1
-0.4859618809288233,-0.8897969947438273,-0.807674815346626,0.7556135549928583,1.2242756732349138,0.14188166482573883,-0.0375085572095601,-0.17077423163813166,-1.4233510422071394,-1.0937174262143725,0.13576860853541287,0.15154422004787937,0.8676377298595351,1.1375973663274013,0.10795606044868465,-0.5068028270526297,-0.5625895674127318,-0.9100052918958245,-0.6950765773706307,1.2058172390215653,0.5138232243031954,0.9561571234975081,-0.22379532022307336,-1.0616850362466719,-1.1297527975569686,-0.39118266123724543,-0.21673922767747442,0.7710980757547582,0.09535645870359755,0.5288717286664686,0.1621229376759498,-0.7015941355527876,-1.4512863769665931,-0.9619411007893419,-0.29812759286910817,0.2992466243271624,0.6405515713789129,-0.09122496059329221,0.6381706796037219,-0.4837662888617662,-1.013205458032853,-0.7644818257976287,0.18290128267453604,0.9658870830935631,0.9705750639704698,0.4375667491751874,-0.2852447294224705,-0.6633932362339401,-0.5734598753495053,-1.0741438267475596,-0.48911122380475336,0.6966722468683801,1.1581445470714753,1.0984095540392822,-0.47620809452140733,-1.3080441883286578,-0.7313739151131902,-0.8598232851604043,0.06460925510053293,-0.014772847001803702,1.3176497620310075,0.5470710830903541,-0.16808635860868032,-0.557965321156463,-1.18611430643298,-0.43101117146572704,-0.025109052414136832,0.6224221282180442,1.7477898453675516,0.2669059654795129,-0.37145351063147797,-0.16361084271334914,-1.4609464301012378,0.06289650814817982,-0.4075828122184838,1.0217627535257305,1.5365621509406737,0.3071584462400299,-0.5046032873353214,-0.6379256569641543,-0.9836226860622919,-0.7479004971193024,-0.24086704570978845,1.2371785059264493,1.076954200344597,0.8141711956251553,0.49014504130888326,0.07747813163019268,-1.2981713210471262,-1.1171980101957635,0.11952040229732543,0.6220558173427999,1.2765433978768528,1.0429871610461272,-0.20327483663209475,-1.079442256464696,-0.7153117567529879,0.05411311784856343,0.040171618440638365,0.67428451661547,0.8788283481560406,0.9400388251771727,0.21614242856530955,-0.9295723762051431,-0.8204209104788602,-0.9430678978142152,-0.5034056775921012,0.49530781037444915,1.6806742575653884,0.4027743292576408,-0.12940889971945707,-0.9194811515906977,-1.2658171523154853,-0.6701536893968265,0.15551494838991012,1.1953780961869103,0.7551749313325504,0.6426213685239719,-0.0766149064386103,-0.29175497326519706,-1.4001442612049573,-0.884443920836274,0.20234264676798036,1.413197865562078,0.9532340417517213,1.4084850586693107,-0.12044439023145181,-0.8906783006896744:0
-0.23030149318736404,0.03389903696680552,0.5423926099649738,0.6213131381093068,0.9122116202782904,1.4684389539675744,1.2510438445746808,1.2709802390916214,0.32360800272476853,-0.43602339378170385,-0.40898576213544285,-0.7580479807167556,-0.9195067944515496,-1.1980396828573219,-1.789976160508206,-1.319240528924814,-0.7607888896739633,-0.42965381341365694,0.11373607038505515,1.0591297165890143,1.932610815950095,2.01063352573637,1.7532387757742973,0.8320019507510127,0.7572809201847708,0.15432433704634868,-0.2166963834936216,-0.9641570210271664,-1.170134383611394,-1.2780684704398886,-1.1704982591935411,-0.7826636478861299,-0.2697323242826702,0.03670234789095117,-0.023135340101914065,0.7234419885571068,0.9676804592271079,0.9856140958745262,0.7947374660278559,0.7157367380898908,0.599079346752703,-0.4679705949015626,-0.6632229933831835,-0.947964611380024,-0.6219001719997693,-0.3066944215944436,-0.37269689049652865,-0.49988701073300973,-1.1052124559346335,-0.18936590693349223,0.5042025492872128,0.5445685955274833,1.2086262194221415,0.8375658905169021,0.3674741044858899,1.182069129931143,0.06241958171468509,0.620135791001835,-0.03491904894328779,-0.5601232482430593,-1.0290067649580383,-0.7090894991524086,-1.4876289689705977,-0.44485741694288333,-0.6853281880926415,-0.4592206661804529,-0.49538840901909464,-0.2794468291425325,1.0251801635422857,0.4776341428300718,0.8913382145458301,0.9632434792424129,0.09624017093218895,0.48130125244869537,-0.5933729705421675,-1.182890175928661,-1.0719653920390728,-0.7566279170988528,-0.6870493828764699,-0.5431568878473523,0.2315177271653427,-0.3631270529467915,0.5241823142457784,-0.6482365493122612,1.4390445899622433,0.37230123768027756,1.4356555509280329,0.8911982314099961,0.36256710596064146,0.3102042149566727,-0.45781277672802534,-0.8960716314169821,-1.0871131399697895,-1.3247742226543244,-1.461194425868556,-0.3835248740137709,-0.3076193492298126,0.036189018954005114,0.07902159610391113,0.5183679634234251,1.3250834650718937,0.7628066516208097,1.4936058426129568,1.761164930896207,0.6006311225899312,-0.2650603786435902,-0.12518198581185117,-0.3600675096363475,-1.1655226904096876,-0.5402493099000455,-0.2086382604361987,-0.6980620430177743,-0.3804995048845914,0.07529959035383824,-0.656392941651772,0.010714273649992112,0.8871513590761689,0.43511624083838063,0.8254303779505456,0.8906683713494198,1.01669788579103,0.16099522442742142,-1.0719505729919034,0.25818091469686943,-1.2590918343548134,-1.1604270771159426,-1.0872921509159388,-0.5115444454963458:1
-1.218221320400415,-0.08083651411078824,0.26233052436464166,0.6297226649432107,0.511772678124443,0.22937696898782112,-0.25268168202244395,-1.0633476554379704,-1.451835697034952,-0.8398573727214623,0.2981659896925686,1.238383869801344,0.7571565177379151,-0.11986102593335635,-0.9208392252351386,-1.3168652934041771,-0.9718889689232165,0.2789449821232587,0.4217785823852185,0.6236459636272464,0.24041946751703835,1.0628852289233848,-1.1213611162326798,-0.7022196238458098,-1.0390475847015836,-0.4330417132094438,0.08566301173104585,0.16262929479712496,0.5976972590683214,0.24478816065022183,-0.6523053385964694,-0.7146100301343875,-1.0167232179146786,-0.2387839839774663,0.17659117008371997,0.4394714570304334,0.9201357015780832,0.28260400978336175,-0.285664376616157,-0.36069231998761875,-1.265904966282543,-0.3601941240741429,0.5519557467566567,0.3985840468964783,0.48904280617702345,-0.3824713908232521,0.024314800214441046,-0.04538299569377058,-1.034450787260484,-0.10535486395662375,0.012895233627936986,0.7940340372008103,0.4994895926694934,0.6412201155371645,-0.35813364413945936,-0.7892823783464026,-1.3862647157428458,-0.22727408129660498,-0.09290155394291921,0.658236383297352,0.3131847078647353,0.13349547992772148,-0.13288908285394505,-1.6439606395757176,-1.0883166025075075,-0.5775227079426487,0.46961625564322085,1.0840151291517997,1.0501004763193003,0.21304713996119162,0.13088938179212745,-1.226987260987986,-1.4233981311485242,-0.3546193023834322,0.549945052756931,1.2319447380763784,0.676944799761994,0.432378596989312,0.21479369009584576,-0.6561293946963843,-0.9367783719261628,-0.5849884630998653,1.020308719579818,0.9519752896728272,0.8258701383386546,0.4671876116265388,0.14196650501013774,-1.5312862553663462,-0.6091757856390347,-0.8214810295367893,0.31976811894201934,0.6120024463083766,0.5777216340459296,1.6033741508981556,-0.5563398256614417,-0.21712259005035728,-0.9321882691470884,-0.5250285191464903,-0.09981003175839442,1.3007416482126413,0.24027121944947205,0.4441676247233432,-0.45667270443953206,-0.04446451861350542,-0.6059672228015653,-0.6251572425174312,0.043279042538940826,0.8384547460600833,1.385669542285337,0.7405510886507185,-1.072262006430234,-0.1471652951487793,-0.28573721412688224,-0.3008831097516982,0.8322928431851917,0.8951999411556258,1.5390590925157088,0.7490972645573027,-0.4440554330656689,-0.6411857291381817,-1.174918125863909,-1.028586444503171,0.32651921238479104,0.639238045390951,1.6355108040862503,0.1838508796498517,-0.5338210561739464,-1.0481408481998997:0
-1.312325495879386,-0.4089326941367798,-0.7965729064034078,-0.4824603059599676,-0.7361141550085482,0.7776734298076908,-0.12345660772140649,0.5670461868243115,1.0828038847554493,0.9127746095248696,1.4690450056806887,0.7946069234804791,0.4864344293743391,0.33812096060024066,0.008753630188828021,-0.9446937430953911,-0.8041182747314336,-1.1217541743707198,-1.464145814646387,-0.44657100143906037,-0.8551015935282507,-0.5280886155793776,0.3878441719830028,0.599693097413914,0.7797709432967012,0.8615272467713591,0.9215439185671338,0.37048964480153684,0.5153139885674924,-0.3208345109141816,-1.0753720080793752,-0.8439813598636359,-2.1606111175171137,-0.42333909437716655,-1.2764096276702221,-0.6395284192977848,-0.3853077759821824,-0.3309040686248585,0.37980493111879565,0.8264495297755667,1.220584605158798,1.3269193721572183,1.053097840807859,0.023917553837424332,0.9736760164899263,0.37311631902781267,0.18023717381527943,-0.08074128170461559,-0.6288102212271078,-0.8229252990258337,-0.7927721512305066,-0.6893563018722556,-0.4584263234153646,-0.3088664993130051,0.11243897731087055,0.8865668764686261,0.953559506829217,0.7619134155330816,0.5220913574227737,0.3172706083024148,0.2573155358231019,-0.2616619767226319,-0.8360300130033356,-1.0563923469030816,-1.163270542536333,-0.6555209193463984,-0.9045897842673174,-1.090066283649714,-0.5184033306354956,1.1451481460754218,0.4985872061016195,0.9546879661912384,1.095577717533028,0.7395502085413799,0.13516594771539214,1.2475611349390479,0.8772265336533301,0.5990741539440526,-1.0164087956295549,0.434986215130024,-1.245853368082583,-0.48962466592383524,-0.7121664112639912,-0.3930839244017621,-0.3664304985418756,0.4400652890786964,1.2090281495551292,0.9532949361484633,0.943270357290279,0.7412750439735454,0.217773269613463,0.9700571867274523,0.5763664460995765,-0.046128381319474394,-0.9509835626662992,-1.118988064531782,-0.9452565847562959,-1.3104761148534485,-1.3144503624279533,-0.8955879617118275,-0.2839227389660886,0.5057238988645006,0.382180441664093,0.2807674154646855,0.7769554763120338,1.7311011778168757,1.4480717959821359,0.989967946709778,0.888869276458384,0.41942966005107646,-0.7751181883359434,-0.7855171539280639,-0.3666217167665097,-1.1529954032181295,-1.1155785049882951,-0.8488708350294079,-0.40948128964923525,0.1332877592170999,0.17338785257803918,1.0014592575433225,0.8748725598440555,0.8679335584924862,1.4964333835813222,0.779232636514778,0.4883273400763044,0.07410659340708438,0.010602315579284094,-0.8617333546375466:1
-0.7778792387535766,-0.6960367407437706,0.26656354667471543,0.49638499890224136,1.110584861749717,1.0808165669457275,0.277347297174217,-0.6318098757314834,-1.5283813135531923,-0.6883925215404667,0.1267165406332697,1.3405118036696555,1.8729005443705802,1.139831181801528,0.010044884495048732,-1.105566525870309,-1.1891799107501364,-0.2845515137436501,-0.09408733519555673,1.0976126153916443,0.694624849847548,0.5794931830464731,0.14778235608180312,-0.4743977623856151,-0.8284639847331241,-0.2979617014964623,-0.5866808649772777,0.9009442783562095,1.219502561043368,0.9441297007530478,-0.2174159815396493,-0.7039866029136264,-1.9928100137813638,-0.9292657280008891,-0.5466027292832738,0.517025049978347,0.8331845540773117,1.361193828410301,-0.6498613473336297,-0.268140482493898,-0.7481480860694505,-0.2553984302431418,-0.16902799201946594,0.7728387364921363,0.5570997119387683,0.5257306604158032,-0.3217731101308749,-0.2952669752658043,-0.2776732358416013,-0.201186633324412,0.6760872749833173,0.8537373839863491,1.4006009324166622,1.0894402430171959,-0.13448388854961207,-1.72395040418894,-1.6922176821755417,-1.1787744675872487,-0.6478107960390587,0.7850532733458147,1.5066224352195214,0.5474010181336154,-0.40738009799151764,-0.8441366861509616,-0.9529186446682192,-0.10853440947249926,-0.023616551329846372,0.8025349248067317,0.7536948675383811,0.9284771568539092,0.44871715083367236,-1.0990677339096813,-1.1847786716952333,-0.5116883126609663,-0.33308587622191055,1.4480973809841386,1.0612721439704798,0.5395451490009632,0.3007624607505757,-0.9235064616730448,-0.8939485298162276,-0.6145457054762626,-0.8700625265612014,-0.018481156615331562,0.6616086387029458,1.0135007166769934,0.049130191991859376,-0.40930648270669756,-1.0561970466004296,-1.5405510567863407,-0.4170339568929337,0.5524008496005901,1.2723066038262472,0.8553294195213056,-0.5668649590326897,-1.2882416411094761,-1.304690659893693,-0.9369042248916062,-0.42747460144708527,0.8115386853625195,0.9403636013166595,0.45400325473136605,0.25370343561668046,0.039819245373220125,-0.7902456172297082,-0.33780682189546224,-0.03150661173592198,1.3848598253688695,0.41292582685614077,0.9400681897009688,0.799034699463606,-0.595872436707699,-0.8259368307559285,-0.37467983716247333,-0.20310285354121888,0.33304233419358137,1.2977556998718285,0.9791638254352548,0.45493462297652654,-0.051594333216332444,-0.7142292991696326,-0.36488519139192077,-0.041295354544853474,0.18579333518961338,0.8592921387851769,0.9720586906147511,0.3902213784759166,0.20622816477970018:0
0.46971368768913346,0.5575823735878633,1.2901573307611316,0.22077690896656277,-0.645209333107873,0.05792605310835297,-0.8797834668426376,-1.167653350048874,-0.8905258563774908,-0.7748366595949134,-1.0791002276496486,-0.522674942869618,-0.08937835710170505,1.5253122962279844,0.576366449607051,0.134765632208117,1.2598168309824038,1.1853226117198896,1.027063941270005,1.1909376443180775,0.48663058983622265,0.35800790894443324,-0.818346750104342,-1.2277867307257317,-1.3520132328529129,-1.3010996137180642,-0.9191384692976905,-0.02286627818874587,-0.5046790488914682,0.5124771623331384,-0.04294205425485309,0.987074770246408,0.9678874016201641,0.6654838549834923,1.0104829671049318,0.2086105709459859,0.37351529448943765,-0.6075550220282113,-0.48262744648558087,-0.7166438650450296,-0.8796053679828594,-0.5632973567531023,-1.6401558742918976,-0.11313249316832197,-0.19508752089101303,0.04783170121188399,0.5017836045072179,1.3789767274221019,1.9198463737183,0.7565351537869309,1.6185814081388115,0.9034887222169062,0.4984205840691523,-0.18434721497314474,-0.769473720228411,-0.02976996877959348,-1.217337322600667,-0.15597704414859415,-1.892531700276784,-0.6631925805070994,-0.47071995344438344,0.7298637538992264,0.40838356497990796,0.2673602301432546,0.6145822044834225,0.425338513502572,0.7995957298944825,0.9812010888527073,0.3582611390978715,-0.2286556145092325,-0.8784790428356388,-1.038736464088964,-1.2515144731282164,-0.6343184462807938,-1.2238562806714828,0.1914919955592035,-0.3349566756544258,0.5010511879891807,0.5439743136198164,0.8554917061261696,0.5244448841072338,1.1547087276489778,0.9918439402657812,0.7022569809672197,0.3260402660722511,0.18600799227474327,-0.9680689487444718,-1.3929088245503065,-1.1635887068765758,-1.0551793734658719,-1.1515806366462549,-0.5253130168430987,-0.5047139097192986,-0.15421820669291592,0.33583107943321056,1.252973197753328,0.8074964069876918,0.31645662619324166,1.8888207194859823,0.03843430062526526,-0.3852368775116804,-0.49141990320898593,-0.9888842540398199,-0.38325399941960814,-1.3009071634372074,0.3250259363188903,-0.776874401876445,-1.1847409912821674,0.3371526170683159,0.1105136987284427,0.5862190792504901,0.6252600390863234,0.9075282365947924,0.9274634172142671,1.0027792347094167,0.974217219674223,0.2948619931297905,-0.25550801383265126,-0.27578844363534605,-1.1801068810284034,-0.599142434394428,-0.7527877938888775,-0.8294829665743695,-0.44801025194455274,0.3760622042204774,0.5342391550201616,1.209618769646323,0.6942497759672044:1
-0.8551436350673207,-0.7291001991287951,1.2679076660839301,1.223274926539355,1.049696494549087,0.5466174970425209,-0.08574760973347129,-1.1093658620650386,-1.22590877933804,-0.1450716963596173,0.47355211352681126,0.2974066988904257,0.7752208176714752,0.5826856007332404,-0.14218998233557853,-1.0399397246009603,0.047094803718686684,0.12679709150996665,0.05350123285642583,0.6851509822793518,1.0419679546590233,1.0234431798972083,-0.6449205843748244,-1.4663409844543267,-0.14520443510671355,-0.6987939240647626,-0.1502625534151119,1.297528540976613,0.6754848941721011,0.3560044101217046,-1.254193674632351,-1.0668643553665684,-0.5501381041165172,0.7054795091708513,0.17658397239428203,0.6194412065455672,0.4903487260788183,0.5317630897334251,-0.544136852907509,-0.6183531098433546,-0.7131262363637846,-1.1607365938948697,0.028983165563565783,1.0768002983736626,0.9037161841522006,0.6705531390606012,-0.7211188338351843,-0.8867047799215869,-0.7650476640964061,-0.5708059728370186,-0.10150051183073577,0.4628967857483235,0.7173665436061303,0.68833131981868,-0.34125702930747837,-0.9244226004144557,-0.35606423855337843,0.42868180368005837,0.09932009869685571,1.081272884623579,0.666625384214727,0.8021994285679774,-0.037565963999542706,-0.9586210280590253,-1.2513959006583268,-0.9461581481146834,0.05371297830001248,0.8755326414419892,1.407298200125387,0.007331515368329877,-1.1328471633960566,-0.5019522496607123,-1.5462640513015464,-0.5837175007876356,1.1079140918766834,0.8575244101513507,0.5821086503037783,0.008294735227317662,-0.11105971749248372,-1.24780886446586,-1.124220182672538,-0.19413168504334247,0.5136044372001758,0.8776692054786646,0.4603591542196215,0.22642100953886857,-0.20630202565669928,-1.2380802949815364,-1.6249335113554468,-0.41036042858293115,-0.20122594625344792,1.2330009609619286,0.7972967647281721,0.9133073582684729,-0.07295864206761649,-0.49867053060092437,-0.34887298785923815,0.20629881129857186,0.46181799407996427,0.8837126540072631,0.8870993852170358,0.09742127088794206,-0.599097180346146,-1.2961166472555887,-1.6412717299869888,0.18107960630332687,0.38722319647446557,1.2448451304081298,1.1618000065878586,0.4382410429764233,-0.05947910189909761,-1.0477677748255474,-1.0486788861212855,-0.057137151528303565,-0.07482989787319089,1.3198921120868579,0.8101510437659466,0.5051913517183553,-0.4135909852270496,-1.710067833697932,-0.9733098385017174,-0.8672984471557399,0.35978516035566654,0.4599916533239708,0.4944119937627456,0.5391606597083242,0.3338410170671976,-0.4460621108488318:0
0.8793657936827394,1.4742176673648637,0.2720143261360918,0.9092626997076221,1.1703064516141748,-0.8754074291682747,0.33794188473953035,-0.8602950411163993,-1.131494990834934,-0.6271744558129955,-0.3189309844674947,0.01105293514485306,-0.7760004978522504,-0.1354373761790259,0.007628711629300455,1.0142096308620203,0.8755510666035321,1.3150727073277522,0.8332970876848422,0.9309567556075237,0.7932683819453981,-0.2903638843243693,0.0008720479036489204,-0.6418072175606161,-0.5046024800906004,-0.49222057091304744,-1.1752612680261474,-1.2290823629525023,-0.5700033093862877,0.6400840791331098,0.7219030966300582,0.6411307820370923,1.5578668497024792,0.47606795186564344,1.0351388595853546,1.1961395316861583,0.33535889738373925,-0.4543990378256213,-0.19061901616324678,-1.1045325487266018,-1.9306569012865942,-0.6612621904104738,-1.827200930244659,-1.0469865041299045,-0.28909573579910347,0.36009395410426737,0.402579482880303,0.601038240440925,1.7196391437131964,1.1866715448869565,0.4125872560896735,0.42452240602502567,-0.08537932241271165,-0.33175854578838126,-0.3875025962799441,-0.8573013270155274,-1.0615529526606748,-1.4984269075696812,-1.2922354090161203,-0.7017396581980411,0.007226513076884683,0.2000844551999529,0.502583117031725,0.19030015258069233,1.5562227335372905,1.2427781190550125,0.810503821533528,0.6671243849908226,0.819227739075221,-0.1972824402797175,-0.36593496426765787,-0.8848363963972663,-0.981011380504257,-1.0637723807128352,-0.3366036947547645,-0.449085807590647,-0.000386414988876177,-0.44152645682978675,-0.036473087651904934,0.710940289969988,1.718648011379973,0.9517136089209094,1.0262359470545537,0.24137467329458884,0.2478737962039223,-0.011965672517188441,-0.6783209678380389,-0.08157670895227331,-0.6920193315339263,-1.4127617222387088,-0.7555867834751163,-0.5619185266036186,-0.26574126769506,-0.0897121613978469,0.8546633044806309,0.9882151939341385,1.5285891726137963,0.6324079824408411,0.03795649476222196,-0.2568368961976272,0.5300175074677765,-0.29049469186531257,-0.9628818380842851,-1.1958151493024323,-0.8591704688611823,-1.1584389759700944,-0.3797032018009221,0.09093980889552533,0.16635490830664584,0.5372201128470583,0.18132811910598823,0.9614959457939515,0.777272521314191,1.6183296169721122,0.2856709531287682,0.3540512420035725,0.487251600011383,-0.6292161189745498,-1.1002827375107729,-0.4123733943233174,-0.9904274304773043,-1.210393976950583,-1.1531230070200527,-0.7402998746207877,-1.3314560204342463,-0.059800237349667246,0.8979579750414473,0.6506465713336111:1
-0.6958571964947639,-1.3957718905152385,0.04639113900716718,0.33147065574058565,1.1323286059921587,0.9320579373248649,0.6924486020035672,0.19771284238814324,-0.5744486827875276,-0.7915424799070595,-0.4778073871966525,-0.06265658446634638,1.5777577536271872,0.6286533938040795,0.9809271586303083,1.0168738715700405,-0.7357173239497574,-1.0142687285172594,-0.6897228364719953,0.5527793244455316,0.5716877992556233,1.4919797181508276,0.45162343970313007,0.10999939115587065,-0.6175473620141164,-1.8538360478533262,-1.0221251881424975,-0.6828765740092029,0.7492379063505251,0.7304337138499534,0.37958015763294023,-0.017177637078832728,-1.1640798126294243,-1.0154942072382944,-0.5876761438118031,-0.006819123685609038,0.8795915069072069,0.9614608497769404,0.41265505440087025,0.26935461662049265,-1.3198483314450509,-1.644303766342028,-1.1140708979800253,0.5121517962914663,0.8846415017150595,1.3074723614670685,-0.08917281535305721,-0.21789430462898465,-1.1133280710302849,-0.8999385943354162,-0.6357387227351923,0.7903484834855357,0.43574304576147366,1.4498394783137367,0.5879732240647986,0.8411277842883566,-1.1933437729960938,-1.1823009477007735,-0.6770120582513598,-0.43813228339707355,0.5186553861622012,0.4431034069845142,0.6530311941653593,-0.021260755396827938,-0.4296014196874074,-0.5227941879116929,-0.466925540953539,-0.11587886710763641,0.7801344229552998,1.0329340570357621,0.2485080681525702,-0.1431959860905495,-0.6449082903188768,-1.2290662252657145,-1.2054285380248337,0.2666212755022307,0.5326173738168138,0.8645690575463264,1.3509787439562035,0.28660995437584075,-0.9475765651483206,-1.632044258788869,-1.5640221558451477,-0.07360025157020811,0.897609435693199,1.198817659511378,0.8719961796420345,0.34260921644647013,-1.105569147195767,-1.532204921960628,-0.4221677203860681,-0.3138894236267087,0.879249837188536,1.0466085338305688,1.1210333408337954,-1.254699242721985,-1.7710319132941699,-0.620152082988661,-0.5692334102098735,0.49264897673036495,1.523083567597056,1.1837831227386573,0.6440603754099228,0.2687659839968708,-0.5356106245493003,-0.8575718830332464,-0.2112634329945408,0.5300426221416074,1.0776408137623452,1.7161325130883294,0.14873400306661816,-0.4187781791903008,-0.7764608744265264,-0.9436693628182785,-0.5679373504941247,0.02561075199506499,0.7386751738927917,0.6065857783704127,0.6822770258174919,-0.6472380726339242,-0.30508764475976624,-0.8093038131842947,-0.22381245978733166,-0.40990659357808334,0.554537589419692,0.8855056497876156,1.08306663603648,-0.22813345903602886:0
1.3052823046893338,1.2345190924147424,0.27377029440707107,-0.27597774427550037,0.5323517220011041,-1.061421027530599,-0.10231389992861195,-0.6302737910043714,-1.1928369634187204,-0.64904966656922,-0.35194672185522335,-0.6673686283760671,0.26422725030692895,0.558573769411889,0.801318360804174,0.4340400936282812,0.49794746802231,0.7935662841799189,0.27297279120779094,-0.10051402267644258,-0.19344328848562684,-0.4818748253885006,-0.8514234981292996,-1.0675546190226373,-0.3826002279259536,-1.3392208913275971,-0.2834988653644862,-0.037684078811634214,0.35121015222531415,0.40050722131817607,1.1943099817311928,1.038114798226025,0.7795727868091222,1.0548935978250096,0.9196774539814071,-0.09207861198869127,-0.8831019524796829,-0.5761410274274472,-1.21650054468808,-0.3768828499043432,-0.5946014385974157,-1.4979498822861421,-0.4805262925908461,-0.09865937418835662,-0.1494192494922008,0.6264315202740217,0.63296236786075,1.204524186957963,0.9940041497184907,0.6229341230074135,-0.04689550777700191,-0.47887398342782717,-0.22161137998418165,-0.15957288410002624,-0.5914548080630959,-1.7182530369783255,-1.1163555582096958,-0.30271680824310265,-0.9694865210376995,-0.29261571163509237,0.38300134346987214,0.7600985219591281,0.9696933525443159,1.3826506115966393,1.0667760133879551,0.811587655804566,-0.19057752503797887,0.404537593154672,-0.21594876760530643,-0.38469861473611666,-1.3273582861668312,-1.2736336797082508,-1.1900332097875912,-0.5645889211363434,-0.6946131854287714,-0.3688793475369026,-0.005000269419122738,1.1641884958105186,1.5668070554613103,0.7468257521820282,1.1289360634464218,1.2008028983904244,0.9152923258849757,0.2974640966950397,-0.10523713569463666,-1.2256649992529471,-1.0291121330383037,-0.3720581247083896,-0.5873987443810504,-0.9460434729828985,-0.3387213510646048,-0.07255568423614839,0.5732787259040784,1.0533126528875407,1.1591110474444697,1.299494928209256,1.2790455148424602,0.07391346512441321,0.45421941685808853,0.15374608768972475,-0.13542422065706577,-0.3715257228632676,-0.9300169401323785,-0.7340452484203679,-1.1719591479816935,-0.5603568299951501,-0.37852544159889634,-0.6250944590232326,0.9964530517483743,0.9891711795274325,0.9360356734613503,1.0296702013773908,1.3275008373644748,0.5114341915715808,0.6435336296403067,0.35608465503600106,0.050943178222221386,-1.263818648472055,-1.031325434506691,-0.3931362614162238,-1.0467015838014626,-0.8059165439674657,0.1485870464655824,-0.2563284794976403,-0.07431365173148868,0.08612949787218105,0.33859649798780767,0.9081474302795336:1
0.4578879525978561,0.4385319688308328,-0.4807070501372074,-0.861451388521653,-0.6085641812445151,-0.7627666062381604,0.4723755810647437,0.7012369226625489,1.1167143573619898,0.6048002572007891,-1.46183326157721,-1.1184425323134344,-0.4528283498219816,-0.8378865258323117,0.17582873007942498,1.427123821410006,0.17445221240296316,0.5413981738621425,-0.7241820009988577,-1.3557997507358808,-0.6039587620750428,0.1237863882288342,0.3731645042250681,0.4210240716589313,1.0829916536265336,0.47045765572291054,-0.5689898190044621,-0.5964380409127856,-0.692767460185216,-0.11672995301366851,0.7653287023739133,1.7373004008483202,1.5796678310889871,0.728833530717751,-0.060362539214270206,-1.9926171120860097,-0.574929104179424,0.19667739816333535,0.8492341819989631,2.0813296159650636,0.24684692551872423,0.5938870740358075,0.20700562423015562,-1.665122533636679,-0.6248101937346772,-0.5114196517072973,0.5415297498075601,0.52263401001378,0.7569144207466091,0.5939510565054691,-0.45476943800661424,-1.3928703217779606,-0.6912529331950485,-0.36505629246490856,0.4476107594009216,0.5763361054199372,1.1037970102221935,0.22608671377511627,-0.5009032666394139,0.22944601783983554,-1.1487227088976995,-0.33767362203785206,0.8956284565920387,1.0024629127248765,1.311838414341208,0.6779716808023791,-0.8408623463304878,-0.7728198976304697,-0.8913331460428453,-0.24232760163248632,0.5509717773693393,0.9180856369438133,0.39179056307095383,0.7797325824720169,-0.3261660398429849,-0.7501467468434841,-1.067287726587152,-0.4605680844852008,-0.09068131736141277,0.9109701042740134,0.6106719418141475,0.47013411759465806,0.01717709512724963,-1.061105096040423,-0.5138208613687958,-0.050952390442174034,0.11956982628259072,0.9403926510247185,0.5035057872343487,-0.062472596463227115,-0.8219241259442682,-1.2756233948595952,-1.302358495033919,-0.13789213193540115,0.782578809607533,0.8217873843369856,0.9435002787441521,0.4914610590660414,-0.3523097400039737,-0.9655985993403041,-1.2813831291277977,-0.5902781440407683,0.16912637297714694,0.7240018323222044,1.2741531350466588,0.08415448416141363,-0.2359168639418615,-1.107154316519318,-1.2554608636944176,-0.5693455016840969,0.45930335979954307,0.9670955313237233,1.126420533498279,-0.06708618012097478,-0.04981242095475086,-1.4777036072951915,-1.098514809803001,-0.5782808454298926,0.3015098123959556,0.873689059979728,0.7178314429366908,0.8425671648590807,-0.220694269460378,-1.3992039956034548,-0.04852668696307405,0.5173551739742457,0.01258353464215961,0.6917370079838513:0
-0.5915348312692151,-1.0362511365061873,-0.7306523538294917,-1.2797465438573583,-0.054251007983107224,-0.10655676541371199,0.435540157642877,0.27944380027914517,0.6404202416196187,1.1371972720743435,1.002382195202793,0.27731665146958207,1.0193274235308576,0.10068322707251957,0.12291880787171874,-0.7966016376405036,-1.1616146487490497,-0.7754182041965874,-0.8126179295159137,-1.2434536230742368,-1.5431459526655897,-0.3724722458054664,-0.19056528282239524,0.0656886788496106,0.22636019564469767,0.7415655679851001,1.2604999888611728,0.07510470053759233,0.703536884846726,-0.1862118850334911,-0.5523090158128852,-0.3067948915540337,-1.3197133851291318,-0.7137334264707672,-0.8725808841905623,-0.13278956552529575,-0.32729173185135935,-0.10226974925115861,-0.07399030802390869,0.6250250610582053,1.1843886424193806,0.9690701496080298,1.417048758346069,0.9106067172964365,0.43682434696889283,0.4254002559549662,0.3900186893080832,-0.7147202847525176,-0.6448897049034943,-1.0840795953659508,-1.0050094845128403,-1.2625816969848125,-0.5741515850300636,0.25350750732146915,-0.09668445869215925,0.9556463731015903,0.8322855007223134,0.9586389595400013,0.933775014933211,0.9697399046142212,0.47954838168506914,0.5843531426680753,0.3121854132709343,-0.06856261034101085,-0.4031799271889109,-0.5272015825865932,-0.8235884811603463,-1.4121063006117476,-0.502835597875733,-0.2563076266953479,-0.3154741983082451,0.7844953396770538,0.29128174226854886,1.269801967017272,1.7836724045490593,0.9761012003577734,0.8815984003402788,0.237390389671689,-0.15229514998855967,-0.6334224833398588,-1.0714851438255488,-0.7393991248757452,-0.8059206488003903,0.14974371961519695,-0.7537404507065317,-0.2659098015540441,-0.49352281561860367,0.8920012887433006,0.9447745321770856,0.4388716175246302,1.426282857902251,1.257985307223498,1.3238884659055437,0.1990418095677749,-0.15758960976488975,-0.6133188108554722,-0.7346544189559516,-1.0798840830877512,-1.930530660937368,-0.7592842412139517,-0.05518592788594867,0.17477805084065812,-0.22979444151632256,-0.05038630461203153,1.3145019999132224,1.4965272806075296,0.9729958935461044,-0.08705853664818464,0.17402692843934608,1.1254545847054167,-0.08105063971485973,-0.1206619113918383,-1.1341464659606997,-0.874193406891684,-1.5542651562904086,-0.9798745588445879,-0.3062477700371358,0.2696675020388853,0.3742290834328206,0.6550122632637312,0.7769218748368536,0.0688827725629565,1.0242288776307618,0.5625189145951148,0.6963006514026076,-0.31949146111415594,-0.1413994361009524,-0.4813072151092297:1
1.2888438152693213,1.108308364330824,0.4784510748839826,-0.36955275353990563,-0.5726289815971005,-0.6192693657070163,-0.5992901051649869,0.15044566885341015,0.6978488067268835,1.3915492516760275,0.6562497338043655,0.5615130048299358,-0.7336733645404909,-1.4618985975709209,-1.7410992286069193,-0.36177673388178866,0.6794883681128032,0.9901460827456331,0.4920244234186688,-0.18054342281458402,-0.8455482042291845,-1.1458968340938216,-0.1704458549274071,-0.10245812459171977,0.5582311253291738,0.9664242439846286,0.5433011164288204,0.11135076118369885,-0.33755616045762893,-1.3855588265851364,-1.0179657018168373,-0.37620930875464786,0.15315487535074146,1.069202186008542,0.7475815179696814,-0.1105630489298488,-1.2193686424781602,-1.6438854989482239,-0.7367776381993737,0.07596376656246057,0.9992562978852295,1.3878635222146023,0.7562036326606374,-0.3344402673469622,-1.2674722882415583,-0.9798851436298117,-0.3150585278131534,0.20337179413809198,0.3231928288154405,0.2914717611244594,0.7273651604577951,-0.0835632417639324,-0.4120115368412132,-0.14574122049554705,-1.4330805202145354,-0.11265074553490535,0.7088119243077948,1.026999977798609,0.08790571370211009,-0.4530614769658431,-1.1435665239127792,-0.8825069400854956,-0.6595674393834973,-0.3215035426911316,1.1248471860155314,1.5271013557676043,0.08984613746408177,-0.07477617540528439,-0.3837439698727105,-0.8001128589560327,-0.953242352785612,-0.06263095537400654,0.6697871429802638,1.3050890755453777,0.13594298323724507,-0.3056553577825975,-0.693570796266384,-1.0204988309783884,-0.7745660628415895,-0.2063490063528302,1.0390829238671708,1.1143187355954378,0.772799635623157,-0.4640811394785095,-0.7575802979411043,-1.0156788299683541,-0.5688564062987144,0.19626740841555873,0.8520804023096625,0.6207919576771109,0.9367598815191269,0.04193693912555442,-1.6637351633106494,-0.741922917519749,0.3234647793920017,0.00027059950451802095,0.08912434098001232,0.4911810728270275,0.9384122488848594,-0.057891462749696684,0.07301984170138853,-1.2066716489089722,-0.7466162844100619,0.20745795286493784,0.3216998639718731,1.521279144670895,1.082015058484186,0.17860794425129006,-0.64819435203557,-0.4546724486181257,-0.630799835680246,0.3212185081638661,0.7178008639055482,0.8393798092939299,0.6767302274507483,-0.34792299882050637,-0.8520123497620015,-0.8490610156337519,-0.616735701266143,0.5303247347553992,0.8388164853055073,0.8905379637095928,0.8569425138389057,-0.37740844916693195,-0.8501050789287778,-0.973201089688585,-0.5923417626926716,-0.0028477628209091083:0
-0.5735708147019016,0.5152461278549446,0.1861968515203427,0.8682850973888621,1.387949234674005,0.19317189750628672,0.6729033167211589,-0.7124882546171327,-0.033594539494797404,-0.7253607904922788,-1.0599590812164539,-0.8090253359535892,-0.8780471144769288,-0.37508060916109265,-1.1504818805279176,-0.6942853255511864,-0.42680665411529484,0.3771525234732982,0.49954557353454176,1.221337118224307,0.09537893779001028,0.8381323057858621,0.07281347083197492,0.4131095114045417,-0.540990617356837,-0.5603698155759186,-0.7951328928719624,-1.2401484214544045,-0.8186297027002096,-0.7703219952526167,-0.5148402676536685,0.2484228492001162,0.7865046416266958,0.09558737886096902,1.08779917738216,0.9682033909424022,1.370114531115775,0.29287489542268474,0.0833070896458693,-0.41637793325198613,-1.3689558861263578,-0.70612239391833,-1.0754211723873002,-1.1324984759448267,-1.1022136780603653,-1.127410700949431,-0.3014881829135589,-0.5027838949601522,-0.1824695690178424,0.2085980168878407,0.769483996422744,0.9965813560196188,0.7046126240254025,1.4029425560324444,0.5947522808356992,0.018230329474318324,0.14445565428799473,0.2834897300857211,-1.0353691778360739,-0.4949916485393773,-1.4876737240544096,-1.6745454557683876,-1.0742205298938716,-0.18308305315873993,0.3925193004359602,0.09529151597095997,0.7306280910573559,1.3064295051350219,0.21928827140990237,0.6705174115442579,0.662481512898581,0.6642352911699944,0.14428578112411208,-1.054143725816499,-1.1226986249715352,-0.7468790176656871,0.0012751255883370893,-1.1422990682763319,-0.7393344343584534,0.0035134383412745718,0.2683789137536481,0.8223266692318514,0.6111696625237939,0.76767370923615,1.2204095610792498,0.7057137726216698,-0.2382083129110164,0.332528621378671,-0.6944709115773207,-1.162023135626027,-1.336310822170121,-1.5047383888555466,-1.1391128590070818,-1.2631138050822253,-1.3703084472951161,-0.0349724219578931,-0.0919006417839755,0.5227971578428727,0.43132214742372615,0.9225560122726206,0.4191734217928965,1.1475179060807177,0.06595404372399366,0.35923185381739353,-0.9702604139431839,-0.16251128378725033,-1.1108239259173756,-0.3890723173270132,-0.9877921668589938,-0.6277592296572824,-0.44706155746044496,-0.057958804468704356,0.7057760565902569,1.2169124367862536,0.6862613369808068,1.7194337868526102,2.0594705975898906,0.7382747864516878,0.38117899335517147,-0.38855812352564595,-0.7018072131937405,-0.8458519790978942,-1.0201843150322027,-0.9727996218306658,-1.6829207358581582,-0.6986317549336665,-0.5788904912015739,-0.7399326265210955:1
-0.7155522896080785,-0.8830435948100057,-1.8122088463708457,-0.32493232323606913,0.9863156227670518,0.7931701878287148,1.028976634780889,-0.18782336776823377,-0.836151710140311,-1.012379850680279,-0.9236439663461216,0.3020062185149494,0.833441311199979,1.6801306610698932,-0.030201829427561444,-0.07457573789726982,0.13781727425076118,-1.1882133575410583,-1.2463537421219921,0.12004643710296008,0.8836385474875608,1.4110871448707665,0.9657335932184605,0.09168886827456008,-0.7418428101457629,-1.1316369958707468,-1.1858320821648476,0.4480971129029521,0.4428567100821358,0.6224869654133472,0.6944990668279143,0.14345788236663332,-0.5230280567576666,-1.393598346119072,-0.7159748825165858,0.549292915113791,0.2592493602618897,0.8639334436092692,0.19232825381560814,-0.23416922309554128,-0.9096908707704388,-0.5438014728939056,-1.2343836413221179,-0.7459428500666468,0.5977185537230998,1.5694447022514695,0.7381514932503792,0.5425762122029272,-0.5458568170827542,-1.2607212507467982,-0.9018557604834936,0.0040795343260176635,0.41982020889166605,1.1809255399626029,0.8219018773663691,0.23604414363749296,-0.9765624061011,0.01768109551498087,-0.8534043563569947,-0.21754537162152124,1.4476841216311065,-0.12511447252538488,1.2772146337350623,0.43780668454774124,-1.1605212479247247,-0.9540922699631629,-0.8732747225873312,-0.6653197510169764,1.5235006052133655,1.250099598400897,0.9278917617817569,-0.3156974368753152,-0.23314892442382074,-0.6257382153709885,-0.9334268487096719,0.08990185453294569,0.7514690122536857,1.374292962927173,1.2613311491263204,-0.7085607928684546,-0.9777504476700662,-0.24173487059360466,-0.8055072004634543,0.061451937567764625,0.9981491327828832,0.520086254039752,1.1629567798944909,0.3070005932327,-0.10456453143762245,-0.7909042356107705,-0.9262847088297744,-0.4310562537513024,0.09045219067966159,1.3439550000835354,0.567089567057332,-0.0023712334955959154,-0.9988359521959591,-0.657722679866517,-0.5819487341558972,-0.0596824259483291,0.625285094003163,0.9126803514718053,-0.208384325958612,9.61113106975886e-7,-0.9223395675525683,-0.7445703834009711,-0.9951531433492891,-0.2609584852273669,1.1118078811132661,1.1420269380047188,-0.05726123493987867,0.37993371852963165,-0.09420425044031056,-0.8161541752719463,-0.9989012497437597,0.15780555521491652,0.4228014095106328,1.1183963719628862,0.8179117523710389,-0.2939048322313301,-0.4096882896823267,-1.0846972763153067,-0.7886241568336939,-0.32162724609870696,0.4679131193856624,1.5304769147216677,0.5799034976704535,0.12097723335138706:0
-0.31305620904974485,-1.1435601729707938,-0.5896045574771573,-0.2464087602999035,0.1350980593332981,-0.0336886618580326,-0.006594488247862851,0.9821978897270341,0.7006112087637235,1.2441497681920772,1.4153581931218087,0.7319157706071737,0.1528940874688017,0.3954724650165218,-0.4681012550457001,-1.1413654370619408,-0.651760849265172,-0.833826007506598,-1.7168969528010445,-0.6457612351338394,-0.7046290810452323,-0.08896855341220308,0.32064820435472613,0.8284041598646747,1.6345134065772577,1.2788451669279604,0.38628562051997883,0.30837712566741127,0.5826424631071481,-0.17788123793482274,-1.3529408038755038,-0.882854306648398,-0.9897744205899895,-0.6972222723819459,-0.8152040003310799,-0.6065387601908754,-0.0313065299681794,0.6618571520112763,-0.6340151076088616,0.18275908776024008,0.9496698140284933,1.1513124968854638,0.11314661185749852,0.0007032410197841399,-0.2104656088250465,-0.16379807506460792,-0.506506402737497,-0.20596981103591627,-0.9161834733252696,-0.3162305092168852,-1.7082663359172117,-0.5144594229575978,-0.7613233900950217,0.44929137170854827,0.10627258105786735,1.0690254544399698,0.30773270317703005,1.281344990799869,1.3010928725975996,0.4576067130778384,0.7645342176448909,-0.5015657789835258,-0.13776549346818417,-0.8587680818602719,-0.9882042781190077,-0.8849620724746698,-0.676222361954032,-0.6240569340552695,0.35081679551086126,0.13419975652534794,0.3331216109235362,0.7004684054502888,1.855408002583735,0.7773419580092561,1.3645680135666236,0.18717134587249162,0.30547211904034965,0.10557144055582453,-0.281333739215752,-0.49393328764688565,-1.0112785856429922,-0.643147790934143,-0.4356192611731856,-0.4199520801250898,-0.24334635156530093,0.6014900120407705,0.4870026356455175,0.5336757608673396,1.524555591764564,1.1088866952583474,1.206940649958288,0.6322104305598015,0.22728083454319775,0.8272005287836804,-0.8973832298559934,-1.3610318639779784,-1.100692319413946,-0.30750825590711983,-0.4550107987227845,-1.0141274861762528,-0.8386688329711798,-0.670863140827168,0.15267830576945107,1.214882752639081,1.1111420274068184,0.6270426927661215,0.6958521627204327,0.49244160644587626,-0.3806747206661898,-0.2448209839246809,-0.39799985957480943,-1.257013083806547,-0.3672636010907596,-1.3793260857103211,-0.915523923478342,-1.64014785881618,-0.5952776636767071,-0.023117298121526075,1.1961683296387395,0.046515653056871,1.6925888430271319,1.2346829520964158,0.8183275576067153,1.0175973010215,0.9309273977799087,-0.5095662459262975,-0.7460721372638401,-0.7606303515912838:1
0.28077178925846297,-1.10589721020388,-0.978570709978464,-0.750949118542281,-1.0618029975142464,0.11953818836614954,0.7257855783343546,1.778968153918809,0.9692649234471631,0.6180686285019534,-1.5962728206859254,-1.2452628000837402,-0.7215770486033595,0.3848469848014122,0.7324861478450901,0.7042565908184224,0.06283564653484686,0.5282828076296828,-1.3336066450884263,-0.7720987100240078,-0.6836965219230613,0.07915489584994928,0.4658717142946478,0.7475177245031353,0.47815310864963134,0.31849420485725627,-0.7584484828634728,-0.6578701920315437,0.15398379956410735,-0.6985635240549202,1.3136274912922608,1.0173557648191043,-0.21967090569897163,-0.8133129296341697,-1.299513242641973,-0.8314777498006857,-1.1895237164068622,0.39347278837943406,0.16326417450083575,1.1614190231472434,0.2946779253451209,-0.20163442464678719,-0.49544040124410144,-0.9997079310473949,-0.8644283202583489,0.09072753464148042,0.9042452491806671,0.6729074730752377,0.05470076229762766,0.23450593184261417,-1.0586819761938702,-1.249387645717515,-0.43682016114452715,-0.10717411247730199,0.4241763542044799,0.9395311012715851,0.4683327758875254,-0.5567557110639837,-0.6515632333882827,-0.7157423122973795,-0.5323745561269199,0.3824495196686971,0.22376687512854543,0.7402572148256765,0.319934087342592,-0.3276588777963735,-1.1704531755023078,-0.8999343162819786,-0.6103291089837564,-0.6259068910094914,0.9246319951860285,0.8384380810037214,0.2666130446544576,-0.5048818691856226,-1.263489677664697,-1.173844217716717,-0.8458263512838394,-0.06598152911182144,1.0782072592639556,0.7744553336638245,0.26525244402344206,-0.5920182864997379,-0.6888189138542882,-1.7994648131775635,-1.1422781222001568,0.21486953425851432,1.2549919893043604,1.0109162621459324,0.7111521628965083,-0.18020424680278738,-0.5942205503463825,-1.0510812652488668,0.07390984684887691,-0.3332984267017293,0.829619662457364,0.17307981938040162,0.8258086346421433,0.2715028038947973,-0.4058612738332186,-0.7945305099938357,-1.2137764862405604,-0.531747605711111,0.7516209761305143,1.5013481629683914,1.103433848124674,-0.4298589943802871,-0.6971704674822463,-1.430421074854039,-0.739526368149498,-0.47089970578434764,0.4509794714537879,1.2867984582237524,-0.1615245652435544,-0.09053572039167995,-1.1554639319987643,-1.4081556555238752,-1.560558428323323,-0.125429340591507,0.7395020124813815,1.3085957851047314,0.25312898554409674,-0.17444037539755183,0.38939934170525126,-0.944146719305959,-0.3508193855084008,0.39120109928010305,0.305298202756444,1.1816104189151564:0
1.9417960984495561,0.5688489346430983,0.6082205191551965,0.25676491745075064,0.7443538862974235,-0.46775949919237564,-0.8663524850165035,-0.5927506399686826,-1.6764393935761663,-0.5798131136303695,-0.6929171218875376,-0.12826942038901054,0.1344958025887376,0.6961996845315409,0.5945323650039618,1.0386194143579286,1.2277539199916805,1.2099606269713834,0.3648754414675046,0.19771178744454376,0.06726163472008373,-0.9022194141008673,-0.3379003891485321,-0.978756599208544,-1.0874815323337572,-0.9223250669430808,-0.6799253723656911,-0.07587717523057513,0.3074731876103158,0.8772653792572609,1.443809279199974,1.148566401129572,0.923561633517038,0.2229482670678462,0.5654817966483867,-0.30373191238477293,-0.992895868842112,-0.7249994068001232,-1.4086584131730524,-0.576364216013356,-1.0794298466593228,-1.3508364127012586,-0.4958896437973055,1.0093014766548554,0.21540552910672864,1.7861265854131627,0.13486716060704318,0.8588667281155766,0.5388777326333651,0.20377320331387616,0.8257810564003532,-0.2029193429525244,-0.3292272550170503,-0.6864994921794493,0.055658273070078645,-0.9649274356167166,-1.363722456284029,-0.46064851053806866,-0.8922943157875295,-0.24070493029452247,-0.07311157803252083,0.8758328700484039,0.18536871299493285,1.5446830561744007,0.5969393932671363,0.9314944942042326,0.2962892818213868,-0.28504118969160486,-0.3250889123095315,-0.4478413606399268,-0.7006698998911277,-1.3840391904843663,-1.4912398301499121,-0.6300586980934153,-0.07916669522357234,-0.16407835186709513,-0.3553374194077638,-0.6955897896769572,1.0071207876518544,0.7675355782763604,1.2412223591325124,0.2997494918774418,0.9221460910949293,0.018566066036267814,-0.1006490042128347,-0.2980594377521284,-0.8861822398885115,-0.4192363603044351,-1.203356218035862,-0.6042616525098843,-0.29152551608593,-0.817653146222914,0.124403159786962,0.7942400835827582,1.1079494395701648,1.0474412742763886,0.47381265626391844,0.3085631761187233,1.2933939103701162,0.08456510747784546,0.20980317115859531,-0.6412930056678161,-0.9181049154824859,-1.0911423058509335,-1.2787672193570472,-0.44938553978944895,-0.4613211390924291,-0.5439290349288667,0.14637778315019456,-0.048262752553420385,0.6115321490741124,1.3380582206067904,1.3596440010580795,0.483932650837837,0.6200314606134218,-0.1388623918345931,0.4566098944212226,-0.5071443813893338,-1.0654967884260074,-0.9618528296438056,-1.643579597273079,-1.205609207259227,-0.5335533389747601,0.4606040285543553,0.12528430822991862,0.674760254319615,1.4309627959760092,0.37945896834414894:1
0.5892112477231525,0.7254543798027955,0.8795432725391699,-0.6091253790583802,-1.056790399847829,-1.6956930916859883,-0.3725847175322299,0.25878585057136266,0.7214958945795763,1.0222583137319499,0.7183274755718544,-0.2781419984698164,-1.2312374568091098,-1.3049527622799042,0.29707550044102105,0.49690093882202846,1.3340139837410876,1.0271412486625164,0.5633476189333071,-0.608211779711189,-0.8853584894984445,-0.6102699082079527,0.2699099986477064,0.00833097464759723,0.8140920739941064,1.2662943584852353,0.5804064856638637,0.2683121152154093,-0.3746355533090695,-0.4507709385668496,-0.8438112311013712,-0.005207967339718442,1.2275137454237048,1.3102636295330392,0.771876072846299,-0.14974690726706993,-0.39398874903047837,-0.6238054167709205,-0.9468361646660232,0.27989833135654796,0.9214994433354475,1.3574574024674768,0.4275032000753475,0.40739945120016535,-1.067533776748912,-1.064424054071256,-0.7965699403275469,-0.1517250822328356,1.442215280347789,0.649033235510402,0.47548799976239947,-0.5866152508616199,-0.20748615754437705,-0.8354804916194821,-1.0781425571757488,0.49443631827588974,1.2812690255779593,1.4131408185271659,0.6400442873014701,0.11226816868456399,-0.47436832472138746,-1.0804978293571164,-0.017909720883260594,0.663963982056624,0.4023864362998957,1.2091857184179007,0.3608082102263512,-0.22323803149338128,-0.5555734209968948,-1.3851153020768026,-1.256197434927803,0.40817010221267613,0.8355717793732458,0.8865105033493347,1.1555965382013467,-0.053481159746361404,-0.6167087485964371,-0.4507112606251842,-0.5108644453603173,0.03883303141038667,0.5265751539787678,0.9466668184342067,1.2258445022119506,0.4407642044452599,-0.6845972671242884,-1.9009538818438307,-1.1707475901871272,-0.21337117095581593,1.2637275905235696,0.9536805626050089,0.18856557180300515,0.05424248988761568,-1.0118108941744115,-1.2675988763471078,-0.5507574810445266,0.39648660090022125,0.32505955262868064,1.1576547683002212,0.18444959859222754,-0.3574128066521536,-1.289481895622552,-0.5052150135143068,0.2503798345692433,-0.13053879273203964,0.9555580315416157,1.160369906849887,-0.5537127566715028,-0.14345545562234016,-0.762801535383699,-0.7460499290090639,-0.8294831984435045,-0.5188620457458712,1.5105647768543868,0.2634475922798494,-0.19326176710981702,0.1677847629427233,-0.12942471981656156,-0.4453439833368412,-0.5731930848473948,0.08365997553783688,1.4606625415300967,0.9683849953826836,0.4960346477339608,-0.0053627851071466615,-0.622274257718632,-0.2207388480084872,-0.05460494338797672,0.48248626891775753:0
0.9635472959357203,0.503246345571305,0.7892463898091225,0.15099549650199945,-0.037257951867628786,-0.1852277893936848,-0.8424792240614092,-0.8789108774967755,-0.6683206754964373,-0.41334587767684594,-1.023903499266078,-0.2744536675382907,0.44401490589519643,0.25171871886056263,1.0926674708596715,1.5773804993959306,1.2639206648365047,0.8717509255183078,1.2549667897356436,1.067428043763516,0.26938379454114597,0.10045195485302749,-0.6395085831919122,-0.7731827205822466,-0.5440305086795971,-0.9765810958883991,-0.5899446138078651,-0.5059996542301143,-0.3978515624120341,-0.14306989571490208,0.28160207596769526,0.8018696977852392,1.1363723511718509,0.9001369886638333,0.24117714648148447,0.7229539395497622,-0.05504028859599292,-0.1799888369971481,-0.5664089485214547,-0.5988003377975353,-1.1556957436869757,-0.330627211448712,-0.5161593085899334,-0.4402462411873149,0.6117445176737152,0.9102435187032685,0.5973619560430938,0.8796060933410478,1.0347598129271922,1.2183100442150008,0.8500151916174912,0.3947760640641369,0.1912324830638038,-0.23909999780497893,-1.111781357477743,-0.3494547880465343,-1.3420584919496226,-0.5711511920863805,-1.3099649772664304,-0.13305405226186018,0.08436331480410182,0.32212191599723944,1.4644432880309513,-0.3987131796877351,0.574881960406098,0.945442777306611,0.7702834717651997,-0.18878433780390586,0.14905780189917558,-0.8638653156122562,-0.8554215655907045,-0.7842069358924231,-1.535215954844394,-1.1746164888440478,-1.146734343012893,-0.3433651668873689,-0.5973424809388136,0.9208372072057665,1.0002708635902071,1.102658864949656,0.6017803164047004,1.0910982323494056,0.3973691399818275,-0.33758150528875364,0.34779768708126013,-0.0648554588080924,-0.49309335860631753,-0.18915130921691847,-0.7892048823850512,-0.9641519149698846,-1.0938702348165301,-0.12841592289767534,-0.7086497388048413,0.39577606516981234,1.5986618481093604,0.38034643036147264,1.2122728337343374,0.866303213469574,0.35629335471780754,0.3090997352131431,-0.280395016976825,-0.5338056681614988,-0.31946698479614993,-1.2199704189948535,-0.6501799214055892,-0.9752523859049479,-0.9543375462663941,-0.23147461231144434,-0.9556569786762374,0.49236203496347364,0.7735890993204266,1.1575340871796493,1.7063529303352993,0.7552237530654278,0.5377911342212527,1.0683000861886174,-0.18655874107475212,-1.4070620480578138,-1.0014075770672057,-0.5966866790796885,-1.7403653398646086,-1.3737430204397807,-1.497851248128891,-0.7390747383705618,0.5576819113920414,-0.1477772355305464,0.7776394413079699,0.7655584192935082:1
0.35435887600787136,-0.9361627919667972,-0.85149778750476,0.13704398637106996,-0.37485732889945617,0.681647705001635,1.6204915098670067,0.799689695173301,0.1371200656853629,-0.5937035039318056,-1.3214465036438943,-0.38084150491945656,-0.3330410850049279,0.5446508205570122,1.0453617980072256,1.0069180001333917,0.15224637242832323,-0.530447807302407,-1.2668334864961839,-0.5356385821928117,-0.4641468672785376,0.8770238980862135,0.9146911720535686,0.64677390663824,-0.651813149818886,-0.4436712907982754,-1.2022136882530166,-1.8838551962675505,-0.32812802732324375,0.7409070959929858,0.8851148184255464,0.837653719020249,0.2205455736641206,-0.8183932621762908,-1.3436824568241004,-1.1044937627480373,-0.35326060673268544,1.1609968425206294,1.119902686327105,1.6564140999246915,-0.062042357346752924,-1.048433617643782,-0.49331368181342655,-0.9890127545781083,0.22478784543255637,0.5803381861907512,1.0301600020624408,1.4160425349427592,0.26243437929815355,-1.663658642341089,-1.5992717827963037,-0.6310524438481984,-0.16264220286388362,0.8221883859681619,1.0444549349231287,0.7354806314670642,0.11534356507568982,-0.33158657300706523,-0.7931150476522082,-0.9119157448570957,-0.5822192795120594,0.7312678551532669,1.0026908496987297,0.8549420151921556,0.36731629176581915,-1.15754236719693,-1.11201740395689,-0.26092299056286694,-0.27240254214299675,1.7538760056421736,0.7917623743484323,0.594450492370264,0.6815700823392844,-0.7986713641221016,-1.0514451868935994,-1.468089474227992,-0.1385974569414655,0.3334702077210871,1.3476115221460843,0.6780934901572875,0.27821805254072507,-0.34414450397539853,-0.7331713487010713,0.012246654905168852,-0.34204416398599113,0.589096309250951,1.0484851589517687,0.4012151798460635,0.17799025494637136,-0.2096877094145635,-0.7699047000033823,-1.5791901762452163,0.24634982789570914,1.0286648549787718,0.7162968890551487,0.9762427044854505,-0.3213278322393084,-0.07904225808305665,-1.2041601489323936,-0.6929367347684887,-0.4082812626289895,0.7277518478103842,1.213482781835505,0.864676077912313,0.8586918393968357,-0.9157791755309755,-0.49263844255579675,-1.3625161786447588,-0.10938754286827118,1.2078403262959412,1.4590899460538944,0.8782667988760848,-0.4241477907126505,-0.398442405573053,-0.7733040927831748,0.03316285748327441,0.47111316680246046,1.0596705959333346,1.4852051024156854,1.0738671643606916,0.21057029946176464,-0.45551614811413066,-1.1931387953066723,-0.8279406793926524,-0.6916684296156967,0.6230312481585355,0.9829534945494336,0.681799263072469:0
-0.7519719280949784,-1.1722155184971912,-0.9620858617868346,-0.7269144412620887,-0.4593711706237719,0.23755525010318737,0.6906272656077248,0.5127925264648584,1.2348488728397093,0.44975953867105956,1.1208723664102864,0.3927963304790555,0.1746466434627235,-0.3491302135051714,0.24148664343736448,-1.2964880979730713,-0.7252602820392824,-1.0405359176613962,-0.6497712902236482,-0.26584753568509273,-0.4402620701439539,0.3330762974556829,0.6620949955223676,1.4583279258317001,0.4685102525988709,1.3391766534018656,0.7655111586467305,0.9063658452218375,0.6377299403794693,-0.44762598062891923,-0.5153289807083136,-0.6485973512266452,-1.1095800905328368,-0.9138925580462753,-1.3917795141509015,-0.772257671792889,-0.6463501656383277,0.39887989022113635,0.20426130750290455,1.1519518212313442,0.9116737752721928,1.0761728866927291,0.5706357746102371,1.061945140764895,0.3060463197838834,-1.0081384095277552,0.17596168459559292,-1.3255169921673187,-0.9510817906829357,-0.6661860798056722,-0.8813194781824775,-0.5549774013695613,-0.4130402202378409,0.5162809856493159,0.5431956439550493,0.9408548583622629,1.351229543995239,1.9005391232514088,1.3925870001912672,0.7395031448194499,0.4052114360407047,0.22095937230421833,-0.6199757003018285,-0.37647357737347936,-0.9631137226565598,0.11138388213207095,-1.9516475481767483,-1.4091804383472895,-0.1971018654487034,0.1964364176776208,0.707569110839992,1.266136649006842,1.3161446166592068,1.0764240347209526,0.7987441786996466,0.8249341097455936,-0.1837187921060949,-0.9073656461175608,-0.46567640921101094,-0.15883795084456598,-1.2319277777516402,-0.8683064898497932,-0.9164583308681891,-0.25909859932988005,-0.4567626061267261,0.36098056006115464,0.13346916961637767,1.0239454683936864,1.604320133857691,0.862130415379877,0.7136833105413511,1.135513811398408,0.09943328196054992,-1.0733251154919987,-0.7509238119351341,-0.343889341891307,0.1256371536321632,-1.3640076261891727,-1.1526665216491803,-0.5983059016433873,0.3811068118745953,0.06089770957328189,1.328097659087271,0.5455438124122861,1.203075355812896,0.9231970141803019,1.0561126056294001,0.505197192190464,0.2685092947093885,0.12523752549619888,-0.06325838787366234,-1.5457483471656048,-0.6178342350871273,-1.3436695930560474,-0.6536086089505311,-0.5793972246672727,0.16178820105276284,0.8348828732143442,-0.34453956594929114,1.604225506429958,1.1994736459398196,0.3267770670351793,0.3371723694823173,0.2737721084211182,0.2005056061876284,-0.7870151537418498,-0.39236949130769616,-0.9113838695312109:1
0.3113778674365278,-0.565158565737409,-1.365147981846488,-1.0939522990326855,-0.5632436712912178,0.5830860761660521,1.2125285049045806,0.6757976775043619,0.8998443763606996,-0.1517043115612976,-1.0371683775647484,-1.3726773670482295,0.3200967218849165,-0.0669439391472672,1.7133736683297036,0.268082378515055,0.4630906758402917,-0.8772695875778982,-0.4827297020091936,-1.0040880349207133,-1.0632988068033378,0.7017970856202747,1.335645579902125,1.0052083416776623,0.4652378212129239,-0.8960923413152209,-1.2158630257710081,-1.153435039104339,0.17774153604064652,0.33862751714102335,0.9526452976566051,1.220349675361982,0.6194166158660892,-0.08318237111671939,-0.6896202325534461,-0.9714136499348176,0.43274006108991264,0.9091879924773426,1.9251492086506308,-0.35742113431659506,0.24826066938252445,-0.77755834093171,-1.4812230706147202,-0.3151750994228071,-0.9380540872397256,0.7683142041165943,1.220837251193145,0.466277601522183,-0.5131825799949241,0.5038944397249825,-0.8539819452476975,-0.4768646511360534,-0.5671990035703287,1.015046976956457,0.5957746137051865,0.5398838939237051,-0.3943464062013594,-0.07599265415304834,-1.5697567832191395,-1.0929170167693933,0.09881752459107873,0.42837702734587335,0.8433072327961553,1.291204918371909,0.616035996459031,-0.6273529804232137,-1.5050574831435375,-0.5676030870519571,-0.05166545043767243,0.34720812280850066,0.9985879499296966,0.7897784772348502,0.3374002163807048,-0.4441975374113033,-0.6267211607522372,-0.6100810426186476,-0.6705027745346434,0.04619570168400344,0.21352067252615214,0.7625130552907337,0.34481164138849446,0.2466432158766504,-0.9880981391358963,-0.9262589597391855,0.09668153214804748,0.3555525769142359,0.6708108590349733,1.1300678505951216,-0.14188780341917379,-0.23233591731676012,-1.6054585153313776,-0.5875535987678056,-0.37496778290859256,-0.029642779416287957,0.6357978263275336,0.28313358248401,-0.2793004070544125,-0.8424825111085019,-1.6018291341016808,-0.35747077703595964,0.3608660825067825,0.5317100775094484,0.8976887320316953,0.7252280962642826,-0.4865766064823353,-0.6198244155232571,-1.6471206760302697,-0.7599691490104774,-0.06298909442828715,0.4762271101917919,0.9756119258217337,0.5521238176822081,0.4961625790059353,-0.2002364185819332,-1.4712228858362226,-1.295030019013541,0.19987233504840424,0.5350584941390211,1.202668830296996,0.6007960729924096,0.5995789543016524,-0.5676101101142595,-0.992419939769396,-1.1439822793882348,-0.18283675300273972,-0.15952754843946393,0.272210829865954,0.31155478648125834:0
0.14963855879429,1.1260830278661715,0.9179823756200451,0.8895257873664264,0.8653244780201867,1.0308889131995262,0.6910968352748625,0.2700778429210445,-0.8417405425773875,-0.16599911416392676,-1.0547595335019384,-0.7004062185173445,-0.48614771749946817,-0.19706690676537264,-1.031176072950303,-0.536112650922228,-0.08053621893424381,0.7558095334722856,0.7083975353755987,1.192454917221045,2.0128679207674725,1.0435576360241987,0.7366116281833499,-0.007778823025074544,-0.36452697537705275,-0.8767514038914639,-0.6117162674051411,-1.0045875151007935,-1.0503306156359906,-0.5786462413576132,-1.0644965593801101,-0.5342355433219728,0.06321505749829819,0.7004871855429294,1.0676611888407113,0.8757754194883512,1.1003816600620635,0.5684503733093383,1.1087943146771249,0.5303006528036955,-0.4072987825514608,-0.6055944242228564,-0.9136114057560701,-0.38234721077092815,-1.4442641634879319,-0.6292619846705558,-0.8847642556481913,-0.7626911237198783,-0.17056636352722507,0.21274394212734052,0.039099055651465986,0.7315743903551094,0.8068301918572891,0.10857111901305039,0.9506400333097069,0.7950416173990296,-0.6051814575735616,-0.17823697739158562,-0.46022190862060414,-1.2461703906931128,-0.2851128320126408,-1.9451913015908397,-0.7362992921735038,0.23130006159557853,0.017612590629950173,0.6552391353476498,0.28603344312578777,0.9046002833050788,0.9120321219521715,1.322578005227879,0.49228102396553625,0.3668348168788284,0.04226118859777245,0.0988971064387934,-0.7099232867514315,-1.0659447317808552,-0.9714663066546193,-0.6783235820840592,-0.7230319107189587,-0.9706728507891971,0.5672070983269077,0.4612819137984662,1.0287152161712518,1.5060643400439062,0.829844838378162,1.2441642006206755,0.9410654841163639,0.9994093822728963,-0.18825844514520693,-0.5190032788739153,-1.0233596792197222,-0.785615606606694,-0.9074197806599849,-0.7286984569896665,-0.48279283319064237,-0.34332807866198983,0.046679357783363906,0.16706201770200912,0.6868528189719281,1.3601316481569485,1.652875816305777,0.4645656828250639,1.275590026170021,0.19527856196328588,-0.17273776508186772,-0.2638336507836211,-0.5339570471511523,-0.19048980095138635,-1.8979090778144783,-0.6603917344323882,-0.3873460494985476,-1.353716142156126,0.2721614880779198,-0.21375686923221032,0.004360176376229319,1.1147610736262807,1.1637597189233697,0.2678882714582106,1.0607430880614122,0.09935566375248958,-0.013477120278532026,-0.5998106016348499,-1.3394766003959169,-0.858452331358732,-0.7713238245261422,-0.4348651249980745,-0.6038396403266149,-0.3442406571283476:1
0.14779541453973694,1.25211877851798,1.4043036949819787,1.0180438089954535,-1.7618974819607245,-0.5984448126438581,-0.9103894451683505,-0.6803661627444093,0.3393453444530855,0.526486693161857,1.3541621192722775,0.7855249819576529,-0.1467112515136323,-0.25535515068943093,-0.5652244109303111,-0.45333141980848335,0.1609340027818873,0.5069658192170332,0.389986940743115,0.5541705316068081,-0.32331700484103876,-1.3931953828273844,-0.6071297595228886,-0.231618518940443,-0.10262047353769838,1.1384255078552576,1.0084962826245365,0.3922802142263822,-0.4871910642821854,-0.7945320229018648,-0.07963293671796312,-0.40767816172177124,0.5422182374975888,0.6598565777226326,0.6387306155591078,0.6187879165872338,0.09357345845898729,-0.9870999606677144,-0.5047618122429376,0.24960480404776064,-0.34516171760608366,1.1521785262187785,1.4551534372677581,0.06776526091857588,-0.130793602479282,-1.2107519701878937,-1.4769562962838372,-0.03089590860790059,0.3539715833267692,1.1070848318413269,1.4944388536953408,0.7814386100335136,-0.4035997602673749,-0.8331558125322946,-1.1312156910861455,-0.36386251800719416,0.4513949172719735,1.3732762766600743,0.0014608398469300177,0.06521716647587744,-0.6969001277488776,-0.924490527466775,-0.8855127330877971,-0.06906525532928642,0.14142685364527963,0.7849898294180511,0.9303956496359687,0.4392847488876117,0.35307465174196795,-1.038861079398741,-0.7444352329972458,-0.21419262810592465,0.6809281054725038,1.2838336708898097,0.9747359175346948,-0.0034820313343712495,-0.5764774208414438,-0.2123483503695316,-0.6189728014045788,-0.505859873562561,0.6937434507532046,0.2969134760596245,1.3707791954643653,0.08854549891223698,0.21591436219326143,-1.1530496494776015,-1.2901811938934604,-0.7121514184399724,0.7303423508211027,1.200613852762848,0.6308496583037608,0.13484946141963716,-0.7121304179622816,-2.147095257681668,-0.8552704751664078,-0.20229257437140713,0.7164826641188866,0.9664131862307638,0.9816006664031074,0.5584011581985844,-0.6202750195565812,-1.477746995714472,-1.4440383009034004,-0.15172451185656904,-0.11827138757337496,0.24886159551200482,0.7651648002296502,-0.3597053153176329,-0.4653352201775535,-0.8051961674552098,-0.8155141809420186,-0.8475223839623316,1.299118034456033,1.1000530227238658,1.0543669641436646,0.3527402851315009,-0.08807679097046883,-0.6368904685857896,-1.246310465930726,-0.4392381098735687,-0.05852272652568802,0.835528828599672,1.166269305181384,1.09484271449022,-0.579823978066855,-0.6492437502185733,-0.3913008060148725,-0.42194638866319534:0
0.6242668880568965,0.5461998907732923,0.8744604710066857,0.4923736479496237,-0.14545905392998817,-0.508998173191959,-0.4300596580261553,-0.5073829221546633,-0.31409058034480164,-1.2919293353083214,-0.827652637616579,-1.119168991041131,0.012886992937183817,0.30401330942094684,0.5898455858695802,0.8042425157357997,0.2475766197059721,0.9450712863218944,0.843883357167704,0.05318826076193095,-0.5532840534215744,-0.24331034858715106,-0.48521584306665766,-1.338374460958709,-1.620997179494479,-1.2527780251447418,-0.7829422446032773,-0.2683383826630164,-0.3012136840648124,-0.11311264455514325,0.386495677612402,-0.21314395224236604,1.007478457762052,1.259159454348328,0.5643701902136392,0.022991973678281652,0.7506283341793214,-0.07213871860094495,-0.4745421498247987,-0.5925362673374324,-0.8233672226829076,-0.8946151347711628,-0.9102070052459095,-1.1462176135691449,-0.10749192237896625,0.45056226831232293,-0.0003828283632998364,0.10787751398234235,0.7579446464113823,1.1764240597229276,0.7003068841643478,0.6736026270937392,0.8612656751780062,-0.8455391407968982,-0.8118679024344961,-0.3820386249622146,-0.6942653449368688,-1.2856884570100535,-0.7995963915870054,-0.1294799487206164,-0.6721615524172777,0.41698627914190534,0.7043237209932682,0.9504511619546586,0.6341845434153108,1.1517081414315433,1.0507229734776207,0.7156940632356741,0.5065938985082273,-0.6577784795368571,-1.5728531980859577,-0.2611105987907436,-1.0632350736792853,-0.47341613927761755,-1.3632663688883189,-0.31111738601166783,-0.2745262980732169,-0.27656968720324054,0.17550848494474747,0.897229820323094,0.9349205896410194,1.5362652846808036,-0.1574122944552816,0.48244286417111903,-0.1601420645236315,0.34726961907074283,-0.6642634817718098,-1.1730964281733387,-1.0082619277954676,-0.8478954092864066,-0.45921782614085227,-0.3073557736069877,-0.2277357719977478,0.5097753285168788,0.5652834912048488,1.0806862573344989,0.5896179463485898,1.0572664505065894,0.34096980127579335,0.3906633882155093,0.6954981257417344,-0.0754924566676407,-1.0814775930658058,-0.7538120291190312,-0.6782099281661964,-1.0497188958618566,-0.834986970875017,-0.42328062757512386,0.49636058540717504,0.17634575169487823,0.1479661753040678,0.8055643871311609,0.7298609954325208,1.1869414090086075,0.7867061649138688,0.23302971825929003,0.37598471619861024,-0.480068322199669,-1.3605369925784863,-0.8344225552989059,-1.0521881643155053,-1.0923203179286562,-0.599235318965215,0.1262906100979358,-0.02024975881914448,-0.4115821937888514,0.5001595176465942,1.2382443349839:1
-0.4823338870707575,-0.03414100593839453,1.2712507439552452,0.11468745376166234,0.23672846323743985,-1.816598682585259,-1.3307454800536371,-0.07052412333796199,0.0016272894447944691,0.712888926413116,0.9631025328794149,0.626606657349614,-0.6184331259072464,-0.7007375481058238,-1.4445980548053554,-0.7738007768037466,-0.37007088460265436,0.7129908008497717,0.5792531216876248,1.1614811721819862,-0.3027689780334519,-0.4144213819143836,-0.6371701077768686,-0.2473201952493801,0.09884463105760204,0.48691063950825664,0.8034457992057279,0.9069907963996178,-0.07654207168828167,-0.21144692453702185,-1.0708186771030883,-0.058806601707828476,0.42009371645156035,0.7879449991070508,1.3631681658645556,0.8362271716074321,0.013594496164078436,-0.8291687678529274,-0.8513622767367063,-0.8986890100860848,0.17502673356758253,0.44365115375054354,0.9503170661527383,0.3637267698074616,-0.037201845708745636,-0.43095877867006216,-1.272289101325478,-0.8294727542800123,0.35121000778138106,0.46875937901977655,0.7652163546026336,0.5196494937527403,0.28268397938696377,-0.6885685563843903,-1.0657304147404227,-0.7069582720690861,0.364078309854141,1.258535621985753,1.45582511027638,0.7953115830101464,-0.23955203285598214,-0.6138311644685381,-1.0294338822514142,-0.4164841391953447,0.4993838296764657,1.0447918005151062,1.4475438622021086,0.3337677114675326,0.6398238534983763,-0.4572316940536266,-0.6780261661196065,-0.6546236891130849,-0.3702881445528896,0.47107837920130796,0.7971422606489653,0.4206731004433942,0.01700674062127277,-0.96374672371624,-1.3459867225916364,-1.414156260317199,0.6052811060133213,1.1011253748420322,0.7495464178550811,0.6989245644358718,0.025752732393643313,-0.9007969210458147,-0.3209431063737159,-0.6379259342971595,0.09206909915878769,0.7130121889248096,1.6979245748131733,0.45179082100669377,0.47666377753049244,-0.4514151711743217,-0.5839611437244726,-0.7694543799097149,0.04715833886876335,1.3202188675023199,0.1455837276386429,1.1079593704550705,-0.13242010291389095,-0.41968829206079505,-0.45913674663758275,-0.5083800111398428,0.042769163701962,0.1536582166716045,0.8579034614987531,0.13336537571867169,-0.16923572410444915,-0.9579170622571864,-1.5419576926134138,-0.6845121596389266,-0.26626454058052657,0.5972292665596777,0.5810744200715579,0.837588378704889,-0.29577418138598366,-1.7110767378054776,-1.0472772250873426,-0.20679304698683426,0.29014472230294835,1.9148918874292558,0.8585892190762414,0.7975221856654614,0.7792506482679584,-0.19086434099185356,-1.6502380371944696,-0.7698169809683286:0
0.13917311173258562,-0.3153602049759002,-0.5711461709376504,-1.0440505003174931,-0.7461377674608695,-1.2339285702676719,0.016936534617864485,0.2095923948249811,-0.002604482042591824,0.3035882927307654,0.3688654733946481,0.34501395675205426,0.43184629861365886,0.7287103067163231,-0.0896164392443003,-0.05453983719244021,-0.29939570995090525,0.11969782830090508,-0.6584820658225709,-1.1324850238020863,-1.4792839726988252,-0.6080277287049641,-0.9431214017991432,-0.3274653156944177,1.0198253048912467,0.4649141933519703,-0.7327414546334353,0.7799561036890209,1.0528088574483256,0.8716050188254322,0.39581675793181864,0.40087495847440047,-0.33572407512021935,-0.26280004816477287,-0.5889242808146272,-0.730801896248719,-1.2335605890851946,-0.8056116274742784,-1.0035935925213488,-0.9506075716012008,-0.2800550523255803,0.2283249333429747,0.5944607063447024,1.2099365509022022,0.7790102887770295,0.40274660620843994,0.9016274518296636,0.4786228274564351,-0.6299174218331013,-0.16847973781846037,-1.1376273585696075,-1.0439620649182104,-1.1605386914796785,-1.5587244574797727,-0.8890205445523779,-0.17255625927837653,0.9232258054626182,0.6581538731226189,1.370532954448056,0.9005954886414933,1.541831681965417,1.4625432252869923,0.7962539231351042,0.28828552358581905,0.9017878678431054,-0.6111365663317769,-1.0922425368191524,-0.6844649175745696,-1.09083098244731,-0.8845717901425453,-1.1061668445523152,-0.6431031847779136,-0.9811534107518058,0.33951747905239793,0.7694800714375167,0.7523429462962973,1.263561841301554,1.1664798281243627,0.6398203957653286,0.34835615802314024,0.19924443926658658,-0.7319433414875773,-0.40928286530255154,-0.9749645718201398,-0.9546494544732582,-0.26923600716989515,0.10138387628019785,-1.1900226130800038,-0.6940854628597424,0.33712291757915436,0.5634227775499944,1.3353911855865075,0.6703211406009193,0.6509716266037253,1.9148584088022422,0.9082409521059815,0.13144919933192184,-0.6529352163349182,-0.912060747722145,-0.20586525991635118,-0.6944700349575422,-0.9794460539937415,-0.437184395692806,0.06511401909379766,-0.2683349961617043,0.288361902252078,1.0165541465338843,0.47290585741283286,0.9473374986737352,0.621777445682409,0.9831856129999893,0.16335195462478636,-0.13730540066302432,0.1259886024523189,-0.44753928107730656,-1.4974417326252172,-0.3258838614538634,-1.1666588776609472,-1.20514203866183,-0.7595286498153218,-0.3852547484180178,-0.5113008677150982,0.3444414960671017,0.4798709565774147,1.0148713740216224,0.8435184027951517,0.8345646887839413,0.7633269359980868:1
0.6745594336447729,1.2555432083197582,-0.4068944106665393,-0.7139507796017133,-1.2466634899577587,-0.3313656755131315,0.3789611757609284,1.0164559230631713,1.16336573705994,0.6569712627659691,0.16215206451179895,-1.0311607547945616,-0.9164977086344019,0.10123775164874838,0.7857777479445328,0.5197282934270162,1.1148055876155096,1.0605152635539716,-0.1886514463281525,-1.1767905295002363,-0.7768338724633665,-0.39853046510944856,-0.31591023163689347,1.2782417652087086,0.43217977469490454,-0.15084849986003745,0.11967856789122691,-0.6602968062103101,-1.3045370107490244,-0.11678298210784283,0.001988616251770048,0.8405539060156645,1.0808773898935466,0.720937274722277,0.0939105259043082,-0.6127352900720172,-0.5531248074466029,0.24319075535146395,0.8585397203104147,0.3585997577212067,1.0502948552108882,0.986162547527954,-0.10225586558975908,-0.5117828973333447,-0.40127542687303985,-0.10136249342552284,0.12462352795133694,0.8819488517582361,0.133381069072684,0.8176238049498302,-0.48624788674152286,-0.8683804749277109,-1.1880783660072838,-1.0239896547789897,0.302083149321568,0.1339323583071279,1.4275198168409422,0.8188117357199264,-0.5493566839509463,-1.3550739105801606,-0.9804922032878408,-0.971725421902815,-0.22665946826989017,1.3067120066775337,0.9914702455492889,-0.2449795469410091,0.6529608671842149,-0.8713750501522743,-1.8105475781763294,0.10657956322018025,-0.0783135308355094,0.33273362959221364,1.0010970677955306,0.4542028023409432,-0.8629345787233282,-0.9517481495333311,-0.45580408624702096,-0.28594617827705876,0.33662029986757025,0.40058254607192445,0.16450890207891655,0.4668228839504379,-0.11311927288972433,-0.7152191133571109,-1.0468254470561216,0.05019687644281434,0.08970141490568899,0.8956074693004005,0.7509465221924628,-0.05278813964148521,0.15004696200331574,-0.6798730253718787,-1.6728934945681415,0.046020174734427766,-0.3400397978691304,0.07579156784715102,0.995292120072322,0.6830814806416079,-0.1105112121977255,-0.7979712885003619,-0.7461297256883325,-1.499253934400173,0.42849388793565113,0.922204510862827,1.1485105821681458,0.7282638265078618,-0.905289350689564,-0.440514669010721,-1.4573159456307072,-0.6487564229521487,-0.33973825024524007,1.3076722038638515,0.5980953053461817,0.5101705773754347,0.6753258432450239,-1.2736391126047768,-1.5161590469510322,-1.1498832280461737,0.26830577569870795,1.2003228033511866,1.179314276959066,0.35167779919699516,-0.0777141793083661,-0.33534027793971904,-0.5972440211889833,-1.5053672250337709,-0.36653603521924377,2.005948857844738:0
-1.1245336009272004,-1.4966831507492264,-0.9270529751698228,-1.3600199525765195,-1.0453058349863829,-0.6182568923310705,0.5571993811288992,0.931183035073495,1.063677490290171,0.5000383392420554,1.2883332690821647,1.2823260245557393,0.9893480618786253,0.5658284055482286,-0.07241718219662757,0.01159466032845724,-0.6694171844580125,-0.26970755010758385,-0.6316644714950203,-1.085615407430658,-0.7185279165668429,-0.21229034333507185,0.16937087350179245,0.22780407363736274,1.1041263682365479,1.6327503923329552,1.024047619450413,0.7499521318106841,-0.18669797649205355,0.13168100975587965,-0.09591678036855508,0.1599438917127326,-0.6562341715493416,-0.6764863115954733,-1.200130553762783,-1.3846850738668703,-0.29792412100097726,-0.6497056346063842,0.5200941864123836,-0.055863997088464734,0.8465597064421541,1.0468011455105724,0.11677093057908472,1.4730541892448819,1.0035092436112483,0.2745739569846055,0.39716503691355676,0.10652492198376051,-0.0051259284047074916,-0.9565669938681576,-0.6688639114467909,-0.9764602853100584,-1.4098013436005585,-0.533592438127291,-0.4850536903641717,0.7136731350668238,0.9482052290840878,0.8486024456785323,0.7035824551520622,0.9547650170371361,0.7479290248702474,0.5079541537291036,1.1204771839198768,-0.11125396338183621,-0.6663298602217027,-0.7019082040468384,-1.5504097547635178,-1.320114241787365,-0.46615511012950933,-0.4831283024968217,-0.5834667495793453,-0.03573855181353125,0.7090890066978641,1.44794869019962,1.8253915047907632,0.4068041387074042,0.5576010045992703,0.46275460969279264,0.0012077507910299434,-0.6801289273849667,-0.7335977910092164,-0.8702911984439141,-0.8600574435120392,-0.4980282606363199,-0.9356974472306122,-0.21373006270328815,-0.7748829970481887,0.32292020203049665,0.5983789959736678,1.2319027966924516,1.206332680687882,1.2952316825591448,0.5378898535661214,0.9014466564777681,-0.1885125888476415,-0.2986458814135292,-1.1963541388696606,-1.450390320394519,-0.8878417566804884,-1.1397633586664604,-1.6431445490333347,-0.6017134704889215,0.26675406390171386,0.05176257958875749,0.9740561598457778,1.05409393388878,1.3131481315340596,0.9793947595375497,1.200098060222207,0.5256624921741024,0.016888276180488104,-0.04619418843451362,0.20820372320363856,-0.18396458703462926,-0.8941877784070247,-1.1385148239752032,-0.40568680965086124,-0.6221046061522165,-0.3129907892281043,0.562427642165168,0.7980640362308177,0.3770535427644493,0.8239010745913473,1.3907388935825455,0.019187708591243746,0.34430936703016857,-0.018216419603134665,-0.09813975132124009:1
0.1352150655220104,1.04005643942003,0.7213868634883629,-0.351497575419467,-0.39045624290244774,-0.4298727107192746,-1.659476463239109,-0.7040575348189284,-0.21320994320676223,0.626186391639521,0.9651315966234738,0.21808236243333962,-0.38347036516898203,-1.4355611981050704,-1.6626282220521778,-0.8165486943571678,0.3790434766982397,1.6860266944738505,0.749895469690407,0.7814926070661583,0.28509268833983226,-0.35139043030835193,-0.5883429144857006,-1.2623676720686852,-0.028564176947799585,1.1320249293013849,1.043272489151305,0.6497891618194188,-0.4089717503295586,-1.0838590052233097,-0.9185595725861196,-0.3678085944062168,-0.023381362373990855,0.7877811048013031,1.2013698318111692,0.29539743236697913,-0.7163356632909628,-0.9893393418035702,-1.3289917094620916,-0.759490925589936,-0.24469643776345268,1.0862962009125205,0.462838858652748,-0.08161013000269468,-0.010387341123809929,-1.5948250547189473,-0.4973781583418258,-1.0839785958295545,-0.24764247065320094,0.26749345607689545,1.6372158785254414,0.7613698223560587,0.6077847014844551,-0.7143708282751474,-1.268932998225833,0.0942999586410449,-0.14167284083947587,1.065374587172078,0.9693386047056123,0.7404827022960071,-0.1188342253831377,-0.38704643085115314,-0.5487493182373184,0.08509397902085836,-0.2701796065748495,0.3604168597908221,0.6752926764030001,0.9175834943838284,-0.25839438506613405,-0.43509925328676247,-1.0213782926779902,-0.6333920659078842,0.7216354870824068,0.840973246448544,0.5518807123517453,1.1329407819769104,0.6400595828431769,-1.3036767869115105,-1.277440340841524,-0.1636395599317168,-0.47218603890712074,0.6540551531775542,0.5632410320750911,0.6347043852834086,-0.4018658855973364,-0.8137201465188764,-1.1311109479187837,-0.47324864267105354,0.7198391653723443,0.6700337375271768,0.8166465070030241,0.6557661289358829,-0.36401536573921145,-0.6804763540541166,-1.4310883204531728,-1.0755452093381588,0.15748224767956262,0.8636377993470772,1.1480527277596133,1.2169076919562642,-0.4933272561483566,-1.057751893280762,-0.7837913257176018,-0.31997803559064153,0.5581408632927366,0.5888457206935342,0.5660009489049931,0.3032965776978423,-0.14428600340832004,-1.1388967517491277,-1.0683010468817427,-0.7222647150393683,0.18042564906602737,0.5575160838145179,0.7507418125604886,0.11853315372106343,-0.01172441080897213,-0.8680090576005994,-1.3408545118168003,-0.7636071943639986,-0.020836118172248314,0.8006831567834299,0.42796506233978315,0.4787381861085571,-0.22783944425003858,-0.8620169148513716,-0.9452666034691609,-0.21983766096630197:0
-1.4575703138020946,-1.2261336214249812,0.19100209812240354,-0.055229095629905495,1.1033022792509963,0.6065902281172552,1.337522795606506,0.44491835158800264,0.4378649234497016,0.14004972650739955,0.06434557339508601,0.1627038731032024,-0.5807746618685612,-0.6337422146467557,-1.1438828571414257,-0.9726481287377388,-1.2384622658553623,-0.9331269916058846,-0.6071862098323779,-0.07627708405003411,-0.06528625527492588,0.8779507895334061,1.0530496800500972,0.645835742071241,1.4243789853129691,1.1774557137639317,0.7145569969697161,0.4741479390588601,0.21525625048290709,-1.2680838512475416,-1.0564500034593793,-0.9107686214121401,-1.0321791065693475,-0.31996678295782466,-0.4195307932089696,0.3220969891211274,-0.05045023548993688,1.4445426803079606,0.45097988993337923,0.6827229874283804,1.0227347866664986,0.41330923747121584,0.338756115509948,0.39889285386383105,-0.4198284488351246,-1.641740705855773,-1.3697339576354364,-1.1300435175980914,-0.017576235469669355,-0.3941242355032479,0.7568908291012559,-0.12872537763968234,0.30289648400990454,0.7327270667978497,1.3963059277670689,1.0850886233126888,0.5680943089179175,0.42340885383446825,0.6119538312054957,0.4820814434553011,0.12827410390472516,-0.4851310114922069,-1.0430411014198957,-0.31548653554128725,-0.7251023770840266,-1.0307278517458647,-0.5281138109989433,-0.17153100189942194,0.47617341032786803,0.7219550023086887,1.0277601819630964,1.302754278761228,0.8282602948799213,0.238248135621831,0.9783837808146194,-0.2673990947530971,-0.3863648370351802,-1.0322849072603066,-0.23274743234751494,-1.6975005610075582,-0.9230466554615835,-0.6471217799424813,0.1230111899671863,0.3749379778706263,0.7021242956157068,1.1948786193464227,0.8224695819121802,0.9179478498292867,1.0794944424810478,0.017225126927787437,0.052635063910613955,0.3367278323428773,-0.04986607160167916,-0.5396057639484193,-1.121824354496483,-1.0745937601335098,-0.9787425018453569,-0.8244816872006506,-0.44550765705773254,-0.14364262003867562,0.0011532783661166723,0.11305763806386648,1.0596299199156594,0.9005819245863924,1.046289075614756,1.0751984433346193,0.710771960208439,-0.16537977872519272,-0.38336932471109675,-0.8778813512850129,-0.8169359408934287,-0.2760720907366606,-1.1440867432920345,-0.5757116282050627,-0.7227246288816125,-0.019440458414636486,0.19717585399603324,0.6945859024680543,0.8175776582857188,0.07027234852397435,-0.29623125626996616,0.7181372716839458,-0.01168561956816877,-0.43751117996208017,-0.4147818578907494,-1.2345291797155686,-1.3834951460868463,-1.2649963817900738:1
-0.6837061929029526,-0.9855154409422519,-0.2984792008307144,0.7813307186629171,0.47780036818903304,0.8060517662103379,-0.009672598513900066,-0.23723423687536313,-1.0849973031077338,-1.1378621729750853,-0.7493295199909512,-0.03496484510881903,0.603496329974182,1.9086189052552063,0.6953555535722296,-0.49917170583303067,-0.7620148774259639,-0.8019924821008362,-1.1515750887602774,-0.0684413214880022,0.7648717133391612,1.8415188081276384,0.3870225017536748,-0.41199221927367874,-0.16098505061420476,-1.0896491836105606,-0.8464534347954702,0.671110514652868,0.8960007007070914,0.35526460088694023,0.07727655082752849,-0.7009953142274402,-0.6121775258816242,-0.9674673670275415,-0.8469026511189107,0.27215482401232916,1.2849383165883876,0.9294970551835556,0.11779423833756902,-0.6772230009717375,-0.9966862755844602,-1.0740184905984365,-0.46590962462242713,0.34759683604908487,0.7868872461869698,0.4441155582347721,-0.03685502957551373,-0.014347343993784512,-0.5256130181817904,-1.1613602980543263,-0.46694481739039817,0.1658684724835391,1.0837407021004015,0.7922049624970539,0.10858298931677862,-0.6178057887979689,-0.8874736062828164,-1.3093769462026945,-0.11769679331751487,0.22796720331902962,0.6671081621889592,1.0916501992489815,0.3770937438219297,-0.5860931816307697,-1.1190882957511439,-1.023342229598743,-0.6496629052625931,0.8550156133871398,0.6616087151349523,0.8921149329634649,0.18393611763767323,-0.4978236544439831,-0.7124948714240327,-1.0272692012713298,-0.2928321168219683,0.6607211832540112,0.9743112175750526,0.8054228890314789,0.4038775450864269,-0.9883574643808578,-1.4315752800211232,-0.8264017519398779,-0.16000270262717303,0.14337276746347655,0.9379170016508194,1.7179849779568515,0.4363689842843649,-0.0827337900624101,-1.2150748047977673,-1.0858611202456525,-0.698853801882763,0.5083990469596759,1.14831774746621,1.8723818798193042,0.5026744462754709,-0.7145078100160742,-0.48233374998670964,-1.224543196144517,-0.6088001551649087,0.8845406519391683,1.6722657202264133,0.8298560945318556,0.8360033123799032,-0.0034823395941858126,-0.49625926330685294,-0.3769542831818855,-0.023557938804914413,0.8049346624580733,0.7234803048251964,0.5816682900424016,0.2084526881808555,-0.28875332284261995,-1.3652248884045337,-0.4882762251562268,0.08128734265709497,0.6017708063990058,0.3073719532590753,0.8789082735922371,0.7365994932336988,-0.4235795385465806,-1.1152060327163482,-1.1756036080710253,-0.3058188054153271,0.2412558501610961,1.258194039638596,0.8720104439362538,1.2007144872442206,-0.1645829896698375:0
-0.23930915604728686,-1.5441718501795199,-0.5331009076043761,-0.25892048783678334,-0.4535984749543339,0.41711555088709534,0.9654275718439426,0.8094660220064628,1.0883319260005422,0.7664421287125769,0.8579196116397753,0.9506335655255356,0.0805842645274204,-0.2714576974891786,-0.2573083211781682,-0.8842810576753062,-0.43271171593995544,-0.5762789471673816,-0.9723678046346557,-0.0930232923011487,-0.7483172993958669,-0.7105218129245183,-0.4826944359014833,0.6595202062654607,1.0569837145941063,0.6625586782800048,0.5170541855014619,-0.415707139195425,0.8025598495788802,-0.11227170505258335,-0.20917900846278753,0.1436848089889211,-1.2487861593826912,-1.566488598573946,-0.917293011178184,-1.0669797614395287,-0.8268811085189645,-0.17152140535972116,0.894328854278951,1.3084886725621745,1.2372454218481135,1.152513724713902,1.6290037254560554,0.45991720303677475,-0.4838784344508063,-0.6258040699998982,-0.31027230559648555,-0.7405722786149114,-0.8894334201018522,-0.6400464949043746,-0.7854948492393957,-0.691833775471903,-0.962373247043148,-0.5208900287538765,0.4664548876907526,0.31125014282572167,0.5854397646513799,1.0426715285244248,0.731599880318308,0.6098830057144369,0.5565818042423123,0.05863755770678074,-0.3812482064540272,-0.4786520435192164,-1.0155610224750375,-1.317795079859943,-1.0103154656511837,-1.0532276452971576,-0.3145913255429253,-0.1333217185723296,0.02496104926946477,1.0398268693207156,0.5813228028520406,0.7345123547019072,1.5511934363126054,1.2737114795299036,0.4642252101899865,0.09579278871448219,-0.017413063040941368,-0.3644638206987863,-0.5698043064713525,-1.1554523674302508,-1.35996791994312,-0.934968607511792,-0.04275316541707419,-0.007298074848723496,-0.0957942027383481,0.030905768107041376,0.7209386779179119,1.1324593355357702,0.5160826655150235,0.5143668182215047,0.8505274639640842,0.6524983153676948,0.14614010796347843,-0.6602651462545772,-1.1242850327761797,-0.9458648919721319,-1.2067737105703327,-1.0588200825697531,-0.6001712989178001,-0.061019079948746446,-0.0330450589059092,0.3076824489173416,1.0015848909891054,1.1462377245232682,0.8237111434289776,0.9966804773415676,1.218678468017003,0.1327983947023955,-0.35948162034414877,-1.6406764285558677,-1.4136142955474704,-1.6994441559454279,-1.7127628760233273,-1.1874258654070278,-0.2493160976516759,-0.6364722631523176,0.7961732427176651,0.7902632741668563,0.22300276997478174,0.31888178328590655,1.0634908430753858,0.3715352047201506,0.3672245149613549,0.26613437213277563,0.6379139380438265,-0.4584312487734432:1
-0.8854234799023268,0.3645262977407929,1.0124301975052417,1.022620968861361,1.0978419355193505,-0.5068224252839526,-0.9435664284873427,-0.9716120768978315,-1.174208230732519,0.5020880781124802,0.6765023055176242,0.8082345404205495,0.8759079903888114,-0.4724252161162772,-0.7207018812656627,-1.050942426161308,-0.17926653139467885,-0.17826613191796375,1.3309737687075542,1.040879040698254,0.29322155935716243,0.02102729184311858,-0.4501546035472909,-1.1145642426788465,-1.583847085950039,-0.06241469706820038,0.2832321327733113,0.70963131320091,0.1849744743440611,-0.584544494355766,-0.6957535194998179,-0.849508195407646,-0.9954141144596346,0.30951234322761373,0.5331525217843913,1.2976073894550533,0.2357924601361927,0.09082434965054248,-1.0109686931855222,-1.1431128160911697,-0.6722942839711489,0.7015015731967126,1.0649074308495239,0.45638099727318415,0.7444105971861107,0.008189109146278573,-1.5699621155809529,-0.8208796149123517,-0.5984220383761955,-0.7589517572528424,1.1978163785209166,0.5397175104544059,-0.30431187929359027,0.11077062587894804,-1.6170930149942973,-0.803931185427089,-0.865624013934476,0.2371525463833856,0.21424265405909082,1.202004733938508,0.8567317197449702,0.516999171071283,-0.3416179646588747,-0.79352623319999,-0.4534565747152831,-0.003743393341803347,-0.2958834596189329,0.42460521281860397,0.6793444859841924,0.15334455995774385,-1.1428039056761,-1.386829447143647,-0.340470739487885,0.5486764174111535,1.3962661397904812,1.1649690377578679,0.5853435690741688,-0.5960412461756597,-0.6235059495003578,-0.838080011939745,-0.6406220229565855,0.12944922642175927,0.07575259161287773,0.22341847104293233,0.5282359877916141,-0.31701820427178656,-0.692009492939792,-1.3571484719117666,-0.9318143051082457,0.41975427094187295,0.6613734559816359,1.0665987315616043,0.26423457441137777,-0.03867608149109171,-1.5821821130601017,-0.6131563529632109,-0.7804123831581138,0.027919715003580675,0.8071524587988016,0.5511952141418273,0.6087135226997118,0.08220601181118536,-0.32021948188528754,-1.0305274868321341,-0.320048033096706,-0.12727943811388442,1.2748192253891717,1.0551772427822748,1.0664824216044078,-0.09789171549247808,-1.1718214024302591,-0.6017379808813332,-0.34607769645048353,0.49826477374640527,0.8769105749469246,1.4616685586376432,0.7640334505637056,-0.09037026849611765,-0.5659157779822502,-1.0340786435870413,-1.073939208309655,-0.5595213954960271,1.0412451826333093,1.3692128792302818,0.6755340224997197,0.364681868247976,-1.4614553421969152,-1.0186090298282333:0
1.2153921138959614,1.3361664755611473,0.0065057875852369,0.38388784099271733,0.16885563885738264,0.3687556524644602,-0.7967057487039224,-1.5164180955282687,-0.5822771058473551,-0.5437560653827183,-0.9851664029937761,0.0013083594522144137,-0.11850474919766985,-0.2372232322144186,0.29322929575727763,0.5523657524647585,0.3492861929969977,1.758851791058202,0.49203763276988915,0.30562792569395525,0.3856931942999036,-0.3090020621453876,-0.9653093963538644,-1.3301868831994743,-1.3700550872946968,-0.674761141650172,-0.625001018501906,-0.6953014100346163,-0.5262679457179126,-0.17495805463460506,0.4556287196255556,0.3919738672994061,1.215132685969129,0.9593145646047273,0.22619018406289204,0.695653781544768,0.9223175314032231,-0.832170612411512,-0.23805811969690527,-0.8086053170983593,-0.837051231282674,-0.39202640148137136,-1.0816967028662787,-0.7803452338371668,0.5038155650197157,0.20398882613195207,1.013795475490081,0.9731332761204684,0.775350550476319,1.313868993801897,0.4131385524266828,-0.2652940449191331,0.7388254973014278,-0.19554476865986897,-0.7052325076593752,-1.087369561594559,-0.953604990772701,-0.48006966304182697,-0.5861920727274651,-0.7402564053279865,0.4438986561255658,0.5329852062267129,0.8049611436060033,0.3139795670367411,1.0863791117057198,1.0963630109865705,0.8222195089929433,0.6521854701003509,-0.27100198020925104,-0.13358788501362948,-0.9072895734792055,-0.15916890289093677,-0.44484754969846185,-0.641230393832765,-0.1870656398006436,-0.8402009244728993,-0.32866139793905846,0.026036139580278617,0.6906145845342611,0.6163087637382862,1.2816323953099988,0.5746887798464642,0.09444476711735594,0.15154427681007143,-0.052755588496540426,-0.25112359242371113,-0.5590107795999747,-0.492179764344076,-0.2857337605162479,-1.0437870555700708,-1.7722020019925924,-0.6680805518512248,-0.12217796329465413,0.27287573009406096,1.1605015827060803,0.8236364869745546,0.7463440109093247,1.2829085721659919,0.6005181905337823,0.29803007757177313,-0.9634737573153451,-0.388812678992756,0.2347653583580246,-1.164945689114764,-0.798378589626291,-0.9537973720653821,-0.6369294408584127,-0.44022178185418687,0.3209505643521964,0.3936116928181951,0.3888541595479807,1.015067174732612,1.0624161760433604,0.8247196088900326,1.0381617448898965,0.5718994958949228,0.4623345544711705,-0.09166859405311614,-1.062572379752134,-1.2971576864371632,-0.5268423060108149,-1.070205706919107,-1.0024175535115654,-0.6367517853419166,0.02231268813461286,0.3414859683732464,0.41349359826134435,0.9500201776129465:1
0.7804946180013432,0.09963593001386117,0.3675059375902391,-1.1296276793142481,-1.6612217334449673,-0.38466179292117764,-0.051863902150884544,1.0419051554075605,1.1837654194629423,0.9623024172971057,0.18259988041509123,-0.3240714427008454,-1.0669223745866605,-1.2219684319184574,0.6521496400041111,0.3899911929924402,0.35551543619906467,1.3325115869714583,-0.35285802454604676,-0.9806487822054386,-1.6991717265753903,-0.5946470815660407,0.6910602802631185,0.8773453981695432,1.0506532513692468,0.0014294026746788369,-0.03167828661852169,-0.5641745669326796,-0.09360635560341235,-0.5093593192400184,0.5964289532246954,0.8093303184902777,0.8275113686736205,0.4383034362736709,-0.9631872496633112,-1.3643067947077636,-0.4943238796679896,-0.19638302889275683,-0.40687684900161486,1.4201417802966472,1.667989981619956,0.19108039196860593,-0.3163909745682263,-0.2179584706578378,-0.6994259946190726,-1.144804354425577,0.09411259171093034,0.7792722770728331,0.8047717589834105,0.3617978908490441,0.6092750283734377,-1.0771191396732132,-0.9837951411413673,-0.7227727815693428,-0.34108474287852936,1.079989308933421,1.315321173003628,0.7530037673019222,-0.10785002529422677,-0.7394067911165753,-1.101667334853569,-0.39183505254172224,0.7104529677340572,0.9145039816219417,0.9236229741354198,0.9641842707746142,-0.07638181610345662,-0.12553608269832928,-0.5056462054773139,-1.0081054708789914,0.4199138150368542,0.3989535367481927,0.6052705358237996,0.37174512782463065,0.3182156481391406,-0.44242640242327425,-1.097544044072033,-0.4157320839870824,-0.4519268068471934,1.1261277908133962,1.4824603790390534,1.1378704021136992,-0.229552591809655,-1.122751451425378,-0.7409411532391945,-0.6952459499359842,0.6000086696079022,0.39512198528996095,0.47757990448092,0.25645356156202337,-0.2052302914349517,-1.6420379571379038,-0.6816441636321466,-1.1299916255742772,-0.008511077756831603,0.8740056992502546,1.0684219534110115,1.0802815506683348,-0.005858705850757137,-0.4935871708613975,-0.6744505443587663,-0.5565090112058081,-0.18569663782855284,0.4135663212312868,1.12662743004963,0.2726508741965862,-0.6278977114863862,-1.4174829194598284,-0.7703988318223775,-0.7802377261561636,-0.28870220414375547,0.3510873065569763,0.9783470006122224,-0.110190240881755,-0.1694515659749229,-1.0181701908070262,-1.0563571169691717,-0.13506923930036985,-0.4200872120681696,0.7652207324558582,0.8815055411239406,0.06702234017785158,0.14078208338024237,-0.8961366989842493,-1.2210702246108647,-0.6169421808221499,-0.2002003274572435,0.9428456738226465:0
0.8594949861193883,1.9214295833954598,1.415331183614367,1.2376638453858133,1.2587053524040794,-0.20682351358598539,0.09656889350277398,-0.415994782929484,-0.28522575768641634,-0.28586037118493257,-1.3715018057924027,-1.2150955845120082,-0.97291478600697,-1.0765094133885031,0.37349301102641214,0.603996837128552,0.9686129517255713,0.6309417480605075,0.9107401859878659,0.6184448960541709,0.4768314588266126,1.0983595336321674,0.6489786374402877,-0.4483523560390098,-0.7080066457256159,-0.7409596851392181,-1.2271489671437459,-0.8720481281950684,-0.8921244194125031,-1.0485513710122552,0.18653874111480584,0.08350653683083223,0.3129051518673412,0.8992800588081089,1.1656881961495031,1.2633425268053382,0.8459104091578536,0.5978057341657035,0.6778459338534409,-0.04880197011420484,-0.6509165864254574,-1.0954117616202401,-0.9330990734734274,-1.1417246621984702,-1.06428677739966,-1.5446078403867058,-0.6366921955390435,0.3712390018880357,0.3217127769939389,1.1198159058528536,0.3496169811181371,1.0215544829432426,1.2897684681370123,0.6660920385850292,0.6832973503598911,-0.8296791806312241,-0.19756126723203365,-0.5491214203525308,-1.4359756828490744,-0.6207863636407805,-0.8755807145706984,-1.175776114946772,0.07898850300582405,0.9985669780697088,0.6911592400168314,0.5484908661259744,1.0949782878162375,1.681147971249149,0.6314707093374761,0.22475010344560015,-0.3361023915264217,-0.4666403300096238,-0.3443173568994542,-0.7905494746702868,-0.9127366558434211,-1.300299126974922,-1.7550803381345648,-1.092733373565073,-0.21032807164903747,0.3701077692416177,0.5848414458411493,0.996704254554476,1.0867922540775714,0.546817902996998,0.9071131361308954,1.2537927153754977,-0.6261236646487482,-0.019723514551415314,0.12968476001200824,-1.218143286000888,-0.6809962340011481,-0.9954045784835385,-0.7722189436650735,-0.19216120976332463,0.29884452346449986,-0.526273328436123,1.0650021753663808,1.1396728185300788,1.0789348546794924,1.065722364048697,0.6983559568286817,0.8222372128092863,0.0780045561304682,-0.3050194611854571,-0.2564190040656175,-1.193017204589924,-0.6006192558030785,-1.4534133631226662,-1.7082969622021227,-0.42487144252324993,-0.6103696245933297,-0.2715551610691508,0.3848319603341906,1.242816305790261,0.841027658895481,0.25523789966835153,0.7165977756124199,0.7444323117762728,0.5098031715240585,0.031941226073918944,-0.4190036408402771,-1.152012039525364,-1.1440932555521444,-1.6243601015322617,-1.5631217542870641,-0.3755761623302417,-0.9046304320262827,0.11070821160697608:1
