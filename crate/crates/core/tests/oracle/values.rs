// Generated by tests/oracle/generate.py (mpmath, 80 digits). Do not edit.

pub const GAMMA: &[(f64, f64)] = &[
    (-0.80000000000000004441, -5.7385546399985048458),
    (-0.5, -3.5449077018110320546),
    (-1.5, 2.3632718012073547031),
    (-3.2999999999999998224, 0.43851739219876308924),
    (-10.699999999999999289, -2.0163855047883623494e-7),
    (-150.19999999999998863, -3.4314101290798540687e-263),
    (0.0010000000000000000208, 999.4237724845954453),
    (0.5, 1.7724538509055160273),
    (1.0, 1.0),
    (1.8000000000000000444, 0.9313837709802427107),
    (2.5, 1.3293403881791370205),
    (5.5, 52.342777784553520181),
    (10.099999999999999645, 454760.75144158558538),
    (33.700000000000002842, 3.0321626547398717871e+36),
    (100.29999999999999716, 3.7114818671826767029e+156),
    (150.25, 1.3321507761951634843e+261),
    (170.5, 5.5620924145599996107e+305),
];

pub const DAWSON: &[(f64, f64)] = &[
    (0.0010000000000000000208, 0.00099999933333360002074),
    (0.10000000000000000555, 0.099335992397852866591),
    (0.5, 0.42443638350202229593),
    (0.92413887299999997182, 0.54104422463518169847),
    (1.0, 0.53807950691276841914),
    (2.0, 0.30134038892379196603),
    (3.7000000000000001776, 0.14075117411541540518),
    (5.0, 0.10213407442427683544),
    (5.9000000000000003553, 0.086019681992648074828),
    (6.0999999999999996447, 0.083116330508351493574),
    (10.0, 0.050253847187598528033),
    (25.0, 0.020016038554466408225),
    (100.0, 0.0050002500375093782827),
];

pub const ERFI: &[(f64, f64)] = &[
    (0.010000000000000000208, 0.011284167808628218149),
    (0.2999999999999999889, 0.3489493387589361667),
    (1.0, 1.650425758797542876),
    (2.5, 130.39575501324692681),
    (5.0, 8298273880.6768035161),
    (10.0, 1.5243074227086696994e+42),
    (20.0, 1.4747975396287862024e+172),
];

pub const ML: &[(f64, f64, f64, f64)] = &[
    (1.5, 1.0, -1.0, 0.39662936531808808449),
    (1.8000000000000000444, 1.0, -4.0, -0.42478976004321822358),
    (1.8000000000000000444, 1.8999999999999999112, -4.0, 0.34079482419801262451),
    (1.25, 1.0, -5.0, -0.10080645224636170735),
    (1.25, 1.625, -5.0, 0.11569912778154559204),
    (1.5, 1.75, -2.5, 0.41115789594550428955),
    (1.9990000000000001101, 1.0, -3.0, -0.16100468349865326684),
    (1.5, 1.0, -20.0, 0.019595747930187505735),
    (1.8000000000000000444, 1.0, -60.0, -0.20558335977619451229),
    (1.8000000000000000444, 1.8999999999999999112, -60.0, -0.0023543243525719778062),
    (1.1999999999999999556, 1.0, -40.0, -0.0045485231438240537682),
    (1.1999999999999999556, 1.6000000000000000888, -40.0, 0.011378788246867161225),
    (1.5, 1.0, -353.55339059327377527, -0.00079780087584332391856),
];

pub const OSC: &[(f64, f64, f64, f64)] = &[
    (1.8000000000000000444, 1.0, 0.47422447070445636267, 0.81832143676063299354),
    (1.8000000000000000444, 2.0, -0.32813042514896128109, 0.75770763184033921468),
    (1.5, 50.0, -0.00079780087584332394804, 0.014629918922326857401),
    (1.9899999999999999911, 3.141592653589793116, -0.98099854389567542055, 0.0012636010757851037599),
    (1.5, 1.0, 0.39662936531808808449, 0.75098871884687023333),
    (1.5, 2.0, -0.14936389502406369011, 0.60044422113067380374),
    (1.5, 5.0, -0.064447308950367077339, -0.026665697005852363783),
    (1.5, 10.0, -0.015300515030893151224, 0.053706577536884701931),
    (1.8000000000000000444, 5.0, 0.090523784801567316637, -0.43482890013010349424),
    (1.8000000000000000444, 10.0, -0.18095876512880017693, -0.067856557818601867815),
    (1.6999999999999999556, 3.0, -0.52462766840123219395, 0.17859911368167159881),
];

pub const DECOMPOSITION_GRID: &[(f64, f64, f64, f64)] = &[
    (1.1999999999999999556, 0.25, 0.83958875310470586275, 0.44047318443723531177),
    (1.1999999999999999556, 0.27972880357753754366, 0.81825156309497082771, 0.4644116943767875576),
    (1.1999999999999999556, 0.31299281420368230133, 0.7943662244889489939, 0.48863494466807432091),
    (1.1999999999999999556, 0.35021242178225020503, 0.76771487167413810412, 0.51290326619778465752),
    (1.1999999999999999556, 0.39185800697256317759, 0.73808776500268873878, 0.53692061382253478921),
    (1.1999999999999999556, 0.43845588585085382149, 0.70529361752143737637, 0.56032810953536430552),
    (1.1999999999999999556, 0.49059496148235481883, 0.66917291112346146802, 0.58269854431926940367),
    (1.1999999999999999556, 0.54893416646650883273, 0.6296145671025044414, 0.60353271188160356369),
    (1.1999999999999999556, 0.6142107905140373747, 0.58657618749145676994, 0.62225873902921125286),
    (1.1999999999999999556, 0.68724979829962085098, 0.54010781005924464902, 0.63823589789657130161),
    (1.1999999999999999556, 0.76897425534902774658, 0.49037867669679724581, 0.6507647004380278184),
    (1.1999999999999999556, 0.86041699372284552449, 0.43770585657551383427, 0.65910532397640042807),
    (1.1999999999999999556, 0.96273366492749279377, 0.38258265677587323245, 0.66250649964526707516),
    (1.1999999999999999556, 1.0772173450159419072, 0.32570358914053961043, 0.66024677007918208863),
    (1.1999999999999999556, 1.2053148764571235407, 0.26798129886707901674, 0.65168930000593724729),
    (1.1999999999999999556, 1.3486451533022345561, 0.2105494566724717027, 0.63634998387516514699),
    (1.1999999999999999556, 1.5090195807355148983, 0.1547444829459477674, 0.61397623005726576206),
    (1.1999999999999999556, 1.6884649675768916843, 0.10205861389047926871, 0.5846303989513283439),
    (1.1999999999999999556, 1.8892491410514784533, 0.054057941732901551017, 0.54876755359629719406),
    (1.1999999999999999556, 2.1139096075448819967, 0.012262493913018608414, 0.50729248805597224033),
    (1.1999999999999999556, 2.3652856215583670796, -0.022008106326302121133, 0.46157709174286947523),
    (1.1999999999999999556, 2.6465540681506967147, -0.047810117675639270607, 0.41341787549704066913),
    (1.1999999999999999556, 2.9612696123482367128, -0.064746941322618477298, 0.36491738656492864524),
    (1.1999999999999999556, 3.3134096229307625769, -0.073099129150716380399, 0.31828464735222046205),
    (1.1999999999999999556, 3.7074244383388879065, -0.07386969580971341244, 0.27556961927111887187),
    (1.1999999999999999556, 4.1482936099626446236, -0.068706511046578026007, 0.23837265479477867044),
    (1.1999999999999999556, 4.6415888336127792968, -0.059685874529378678907, 0.20759456936147850951),
    (1.1999999999999999556, 5.1935443645014425229, -0.048981192619885486549, 0.18330398272822726909),
    (1.1999999999999999556, 5.8111358056354038837, -0.038488610678291401591, 0.16478243983903152663),
    (1.1999999999999999556, 6.5021682653479251357, -0.029516848389383940402, 0.15075828417972030765),
    (1.1999999999999999556, 7.2753749981024302684, -0.022645791611749340628, 0.13976847748976999706),
    (1.1999999999999999556, 8.1405277751884881354, -0.017803263054922758771, 0.13052583229121141883),
    (1.1999999999999999556, 9.1085603801727579309, -0.014517265142604820202, 0.12215843975852482516),
    (1.1999999999999999556, 10.191706789837944314, -0.012220702779161677953, 0.11424870726081050368),
    (1.1999999999999999556, 11.403655786937735073, -0.010472509882226358798, 0.10670367597468315978),
    (1.1999999999999999556, 12.759723958760620377, -0.00902768906029590038, 0.099567792519833306852),
    (1.1999999999999999556, 14.277049267854996728, -0.0077884410740392233104, 0.092887762931714398862),
    (1.1999999999999999556, 15.974807641258545132, -0.0067220246838783856704, 0.086667763540752105959),
    (1.1999999999999999556, 17.874455315482229878, -0.0058085415929001441349, 0.080882317952130367521),
    (1.1999999999999999556, 20.0, -0.0050267200493519100882, 0.07549834665779867534),
    (1.5, 0.25, 0.90853559220300213255, 0.36768241588551818866),
    (1.5, 0.27972880357753754366, 0.89229339522314664539, 0.39669022257437321432),
    (1.5, 0.31299281420368230133, 0.87328494822077171983, 0.42732657511621849764),
    (1.5, 0.35021242178225020503, 0.85108592834472181112, 0.45948639922270305468),
    (1.5, 0.39185800697256317759, 0.82522574744694447454, 0.49299254090856538272),
    (1.5, 0.43845588585085382149, 0.79519056767606870423, 0.52757561266113259851),
    (1.5, 0.49059496148235481883, 0.76043075088637046358, 0.56285014622501165762),
    (1.5, 0.54893416646650883273, 0.72037466312752575426, 0.59828711298175437398),
    (1.5, 0.6142107905140373747, 0.67445128872113902937, 0.63318337796601515462),
    (1.5, 0.68724979829962085098, 0.62212466705601409468, 0.66662947568302950961),
    (1.5, 0.76897425534902774658, 0.56294365442056252933, 0.69747835731112033881),
    (1.5, 0.86041699372284552449, 0.49661075545350495395, 0.72431959537831826149),
    (1.5, 0.96273366492749279377, 0.42307346249169062941, 0.74546606476124952978),
    (1.5, 1.0772173450159419072, 0.34264021226556107242, 0.75896339386335838154),
    (1.5, 1.2053148764571235407, 0.25612003002757433429, 0.76263635508298393312),
    (1.5, 1.3486451533022345561, 0.1649792754491681857, 0.75419032060993910791),
    (1.5, 1.5090195807355148983, 0.07149960588175349205, 0.7313887711805832496),
    (1.5, 1.6884649675768916843, -0.021092509607318368733, 0.6923274134922407206),
    (1.5, 1.8892491410514784533, -0.10857263397266390518, 0.63581816601676655587),
    (1.5, 2.1139096075448819967, -0.18581005200864654366, 0.56187708888993483626),
    (1.5, 2.3652856215583670796, -0.24708960853343748352, 0.47227351315087241957),
    (1.5, 2.6465540681506967147, -0.28674971613913904801, 0.37103914648894552388),
    (1.5, 2.9612696123482367128, -0.30018723330091070331, 0.26475883298606465318),
    (1.5, 3.3134096229307625769, -0.28518335762424253447, 0.16238790339457406618),
    (1.5, 3.7074244383388879065, -0.24332757666910567892, 0.074310299479607817856),
    (1.5, 4.1482936099626446236, -0.18107128853635293624, 0.010444034884530606933),
    (1.5, 4.6415888336127792968, -0.10971305425274009147, -0.022493576642189457894),
    (1.5, 5.1935443645014425229, -0.043595388059660458394, -0.023892062701477548493),
    (1.5, 5.8111358056354038837, 0.0037472771037084958327, -0.00099219393531419695405),
    (1.5, 6.5021682653479251357, 0.024629006276215468227, 0.032182493952255315504),
    (1.5, 7.2753749981024302684, 0.021087653436948890649, 0.059618818875142176902),
    (1.5, 8.1405277751884881354, 0.0044928006006098695815, 0.070510401325090858883),
    (1.5, 9.1085603801727579309, -0.010588711285310406976, 0.064689380774723770639),
    (1.5, 10.191706789837944314, -0.015318127216119199116, 0.051460640565058508484),
    (1.5, 11.403655786937735073, -0.011273622918529229242, 0.041355553231144040293),
    (1.5, 12.759723958760620377, -0.0060290140482191988053, 0.03771175805140841804),
    (1.5, 14.277049267854996728, -0.0041697302275546588787, 0.036657804848959299696),
    (1.5, 15.974807641258545132, -0.0042694629259269359198, 0.03442401539126813272),
    (1.5, 17.874455315482229878, -0.0038952001853539839451, 0.03136188746506560206),
    (1.5, 20.0, -0.0031463121228842020769, 0.028790143066578716414),
    (1.8000000000000000444, 0.25, 0.95131434927478417406, 0.29294964759442403701),
    (1.8000000000000000444, 0.27972880357753754366, 0.94053947014027460451, 0.32273561774774991535),
    (1.8000000000000000444, 0.31299281420368230133, 0.92741774389209431198, 0.35520551879673800381),
    (1.8000000000000000444, 0.35021242178225020503, 0.91145680617393545878, 0.39047684854378896549),
    (1.8000000000000000444, 0.39185800697256317759, 0.89207039616547625688, 0.42862265030232168519),
    (1.8000000000000000444, 0.43845588585085382149, 0.86856525087713324222, 0.46964829091814833252),
    (1.8000000000000000444, 0.49059496148235481883, 0.84012880044814581172, 0.51346029864317606994),
    (1.8000000000000000444, 0.54893416646650883273, 0.80581952840626378293, 0.55982515996833665584),
    (1.8000000000000000444, 0.6142107905140373747, 0.76456297410889369764, 0.60831572326459829821),
    (1.8000000000000000444, 0.68724979829962085098, 0.71515795034742983369, 0.65824281251255339615),
    (1.8000000000000000444, 0.76897425534902774658, 0.65629976477783825304, 0.70857005048007065286),
    (1.8000000000000000444, 0.86041699372284552449, 0.58663018935573894215, 0.75781111693650361837),
    (1.8000000000000000444, 0.96273366492749279377, 0.50482765044705733823, 0.80391134109842277591),
    (1.8000000000000000444, 1.0772173450159419072, 0.40975542109751364328, 0.84412057557872682666),
    (1.8000000000000000444, 1.2053148764571235407, 0.30068981193825544661, 0.87487302293503253535),
    (1.8000000000000000444, 1.3486451533022345561, 0.17765288797459276062, 0.89170373629484054027),
    (1.8000000000000000444, 1.5090195807355148983, 0.041871901419501518129, 0.88925262495246692902),
    (1.8000000000000000444, 1.6884649675768916843, -0.10362528120920119158, 0.86143597033318402285),
    (1.8000000000000000444, 1.8892491410514784533, -0.25330220398622783166, 0.80190112079628740185),
    (1.8000000000000000444, 2.1139096075448819967, -0.39838248037136606433, 0.70491438512195302672),
    (1.8000000000000000444, 2.3652856215583670796, -0.52629836091497299082, 0.56684497009228611316),
    (1.8000000000000000444, 2.6465540681506967147, -0.62069491258787002792, 0.38835777608042841329),
    (1.8000000000000000444, 2.9612696123482367128, -0.66258177314355320036, 0.17724435481816000648),
    (1.8000000000000000444, 3.3134096229307625769, -0.63340759638547833628, -0.048592552979156654234),
    (1.8000000000000000444, 3.7074244383388879065, -0.52078434704913461052, -0.25921333004291231148),
    (1.8000000000000000444, 4.1482936099626446236, -0.32693520541805174577, -0.41397794237222540357),
    (1.8000000000000000444, 4.6415888336127792968, -0.078170406941061781308, -0.46916512780243568646),
    (1.8000000000000000444, 5.1935443645014425229, 0.16948941901902996817, -0.39436814434393783868),
    (1.8000000000000000444, 5.8111358056354038837, 0.33715341516581692544, -0.19627406624158259059),
    (1.8000000000000000444, 6.5021682653479251357, 0.35163686036225354296, 0.060592929035347809146),
    (1.8000000000000000444, 7.2753749981024302684, 0.19551910251969119424, 0.25853443681494415327),
    (1.8000000000000000444, 8.1405277751884881354, -0.047357736328275541298, 0.28148833276097986263),
    (1.8000000000000000444, 9.1085603801727579309, -0.2082122891300121395, 0.11383752877694688955),
    (1.8000000000000000444, 10.191706789837944314, -0.15737805224751418547, -0.096426180689824175846),
    (1.8000000000000000444, 11.403655786937735073, 0.033661454921003394151, -0.13791001400344876057),
    (1.8000000000000000444, 12.759723958760620377, 0.11952046821680479972, 0.010189929159483451967),
    (1.8000000000000000444, 14.277049267854996728, 0.0057816737906059584853, 0.10217032779807271674),
    (1.8000000000000000444, 15.974807641258545132, -0.070466618931853213677, 0.006795227627151108391),
    (1.8000000000000000444, 17.874455315482229878, 0.014942565156280656309, -0.039576370844242364365),
    (1.8000000000000000444, 20.0, 0.022067984546615973469, 0.032794867035948079809),
];

pub const ROUTE_GRID: &[(f64, f64, f64, f64)] = &[
    (1.25, 0.5, 0.6778687279993201014, 0.58594085760252307467),
    (1.25, 0.7979797979797980112, 0.48212283886553853344, 0.66449757577736709976),
    (1.25, 1.0959595959595960224, 0.31540568356838710217, 0.67549541131472125173),
    (1.25, 1.3939393939393940336, 0.18171537992409358692, 0.6472140708991530495),
    (1.25, 1.6919191919191918227, 0.07972540493221676763, 0.59742365527968718807),
    (1.25, 1.9898989898989898339, 0.005705051911707510465, 0.53782942134566316454),
    (1.25, 2.2878787878787880672, -0.044987232211690690886, 0.4760654809509466127),
    (1.25, 2.5858585858585860784, -0.077081421573928393732, 0.4168969700855428384),
    (1.25, 2.8838383838383836455, -0.094950771636009699213, 0.36305689282508652354),
    (1.25, 3.1818181818181816567, -0.10239516823363838154, 0.31586349529349524215),
    (1.25, 3.4797979797979796679, -0.10256514943895424761, 0.27568261534203516529),
    (1.25, 3.7777777777777776791, -0.097970533609509676641, 0.24227166189621102426),
    (1.25, 4.0757575757575761344, -0.090536695123161567468, 0.21503074130908722246),
    (1.25, 4.3737373737373737015, -0.081684082746494773765, 0.19318090234770539606),
    (1.25, 4.6717171717171721568, -0.072415201211126651048, 0.17588589759601127564),
    (1.25, 4.9696969696969697239, -0.063399298103292540711, 0.16233104455974066238),
    (1.25, 5.267676767676767291, -0.055049186105940960329, 0.15177032950259386923),
    (1.25, 5.5656565656565657463, -0.047587489541715732697, 0.14355073034763392026),
    (1.25, 5.8636363636363633134, -0.041101492336281455074, 0.13712082920922429641),
    (1.25, 6.1616161616161617687, -0.03558694832038157032, 0.13202914484434215254),
    (1.25, 6.4595959595959593358, -0.030981896184073656385, 0.12791623911439497497),
    (1.25, 6.7575757575757577911, -0.027191853886180581394, 0.12450352708468002267),
    (1.25, 7.0555555555555553582, -0.024107866534591834506, 0.12158082596724523007),
    (1.25, 7.3535353535353538135, -0.021618833344849876667, 0.1189939860945001489),
    (1.25, 7.6515151515151513806, -0.01961940524563224559, 0.11663342725771070457),
    (1.25, 7.9494949494949498359, -0.018014568547923075581, 0.11442402588191747785),
    (1.25, 8.247474747474747403, -0.016721841177844872044, 0.1123165343726376025),
    (1.25, 8.5454545454545449701, -0.015671825006405710495, 0.11028053832157161676),
    (1.25, 8.8434343434343443136, -0.014807691737841383935, 0.10829884842099150995),
    (1.25, 9.1414141414141418807, -0.014084036089250463226, 0.10636316390595689535),
    (1.25, 9.4393939393939394478, -0.013465410321876344902, 0.10447081862064614544),
    (1.25, 9.7373737373737370149, -0.012924757885104943587, 0.1026224180548664581),
    (1.25, 10.035353535353534582, -0.012441888910044152916, 0.10082018732298639272),
    (1.25, 10.333333333333333925, -0.01200208372812287473, 0.09906686975168076078),
    (1.25, 10.631313131313131493, -0.011594869443169935901, 0.097365039047785428638),
    (1.25, 10.92929292929292906, -0.011212985877832996362, 0.095716711929348455297),
    (1.25, 11.227272727272726627, -0.010851538229245119865, 0.094123170724404780596),
    (1.25, 11.52525252525252597, -0.010507322138644403112, 0.092584925691446200753),
    (1.25, 11.823232323232323537, -0.010178300624055429968, 0.091101764190406823599),
    (1.25, 12.121212121212121104, -0.0098632098406071257679, 0.089672848223258521359),
    (1.25, 12.419191919191918672, -0.0095612706624250964462, 0.088296833409163456225),
    (1.25, 12.717171717171718015, -0.009271984668721359157, 0.086971991445397077328),
    (1.25, 13.015151515151515582, -0.0089949955643190369938, 0.085696324886249850103),
    (1.25, 13.313131313131313149, -0.0087299998773736767996, 0.084467668020336331206),
    (1.25, 13.611111111111110716, -0.0084766936227742854357, 0.083283771099925683854),
    (1.25, 13.909090909090908283, -0.0082347442905827978805, 0.082142367497722881376),
    (1.25, 14.207070707070707627, -0.0080037798979611551982, 0.08104122481701995187),
    (1.25, 14.505050505050505194, -0.0077833888779802245936, 0.079978181793872776157),
    (1.25, 14.803030303030302761, -0.0075731262607964240039, 0.078951173193523861516),
    (1.25, 15.101010101010100328, -0.0073725229508642735643, 0.077958244965335948707),
    (1.25, 15.398989898989899672, -0.0071810959528895246734, 0.076997561793104845673),
    (1.25, 15.696969696969697239, -0.0069983581912737444557, 0.076067408943088156773),
    (1.25, 15.994949494949494806, -0.0068238271466725963872, 0.075166190028604200741),
    (1.25, 16.292929292929294149, -0.0066570319407977579523, 0.074292422016865074568),
    (1.25, 16.59090909090908994, -0.0064975187744134919549, 0.073444728525625351406),
    (1.25, 16.888888888888889284, -0.0063448547961255136062, 0.07262183220844104065),
    (1.25, 17.186868686868688627, -0.0061986305780990921701, 0.071822546814485584556),
    (1.25, 17.484848484848484418, -0.0060584614211017693388, 0.071045769333489944557),
    (1.25, 17.782828282828283761, -0.0059239877223202180445, 0.070290472496737833666),
    (1.25, 18.080808080808079552, -0.0057948746282089122018, 0.069555697797545182989),
    (1.25, 18.378787878787878896, -0.0056708111707080291957, 0.068840549114772180592),
    (1.25, 18.676767676767678239, -0.0055515090552533549438, 0.06814418696590727782),
    (1.25, 18.97474747474747403, -0.0054367012376409008575, 0.067465823377562909382),
    (1.25, 19.272727272727273373, -0.0053261403968905174656, 0.066804717336713264598),
    (1.25, 19.570707070707069164, -0.0052195973844376944641, 0.06616017077212624109),
    (1.25, 19.868686868686868507, -0.0051168597070634114547, 0.065531525009236054264),
    (1.25, 20.166666666666667851, -0.0050177300821511641428, 0.064918157640791324451),
    (1.25, 20.464646464646463642, -0.0049220250889643122817, 0.06431947975814082244),
    (1.25, 20.762626262626262985, -0.0048295739282739876287, 0.063734933492589787235),
    (1.25, 21.060606060606062329, -0.00474021729433988903, 0.063163989821856535944),
    (1.25, 21.358585858585858119, -0.0046538063574261542798, 0.062606146602573391123),
    (1.25, 21.656565656565657463, -0.0045702018512147870907, 0.062060926795540229847),
    (1.25, 21.954545454545453254, -0.0044892732572009244754, 0.061527876855766849994),
    (1.25, 22.252525252525252597, -0.0044108980770216150511, 0.061006565264079471922),
    (1.25, 22.55050505050505194, -0.0043349611833540864798, 0.060496581181159276447),
    (1.25, 22.848484848484847731, -0.0042613542402567518034, 0.05999753320832970757),
    (1.25, 23.146464646464647075, -0.004189975184411948088, 0.059509048242258705528),
    (1.25, 23.444444444444442865, -0.0041207277595099937923, 0.059030770413055883078),
    (1.25, 23.742424242424242209, -0.0040535210968788046161, 0.058562360097096821468),
    (1.25, 24.040404040404041552, -0.0039882693363357400748, 0.058103492997372640817),
    (1.25, 24.338383838383837343, -0.0039248912820688616913, 0.057653859285312091779),
    (1.25, 24.636363636363636687, -0.003863310089114275573, 0.057213162798919955924),
    (1.25, 24.93434343434343603, -0.0038034529766700926549, 0.056781120292773300777),
    (1.25, 25.232323232323231821, -0.0037452509650715748815, 0.05635746073596179145),
    (1.25, 25.530303030303031164, -0.0036886386337488930264, 0.055941924654487327743),
    (1.25, 25.828282828282826955, -0.0036335538979052747983, 0.055534263514980756587),
    (1.25, 26.126262626262626299, -0.0035799378019981055908, 0.055134239146872102828),
    (1.25, 26.424242424242425642, -0.0035277343283886099539, 0.054741623200383558898),
    (1.25, 26.722222222222221433, -0.0034768902197566386226, 0.054356196637913159738),
    (1.25, 27.020202020202020776, -0.0034273548140649788228, 0.053977749256551849378),
    (1.25, 27.318181818181816567, -0.0033790798910104694334, 0.053606079239633367063),
    (1.25, 27.61616161616161591, -0.0033320195290239996848, 0.053240992735359494061),
    (1.25, 27.914141414141415254, -0.0032861299719841117146, 0.052882303460676185407),
    (1.25, 28.212121212121211045, -0.0032413695048940810923, 0.05252983232869992703),
    (1.25, 28.510101010101010388, -0.00319769833784397391, 0.052183407098110357343),
    (1.25, 28.808080808080809732, -0.0031550784976402219444, 0.051842862043034880169),
    (1.25, 29.106060606060605522, -0.0031134737265380670286, 0.051508037642054137361),
    (1.25, 29.404040404040404866, -0.003072849387558622853, 0.051178780285054374366),
    (1.25, 29.702020202020200657, -0.0030331723759135775404, 0.050854941996743747161),
    (1.25, 30.0, -0.00299441103609770028, 0.050536380175734616507),
    (1.5, 0.5, 0.75404880386935694369, 0.56884461680006770171),
    (1.5, 0.7979797979797980112, 0.54188367156033680585, 0.70684296253097853923),
    (1.5, 1.0959595959595960224, 0.32972512585803899649, 0.76022222265901445702),
    (1.5, 1.3939393939393940336, 0.13761380786967311576, 0.74907108503573729011),
    (1.5, 1.6919191919191918227, -0.022743615264516712217, 0.6914574520318150093),
    (1.5, 1.9898989898989898339, -0.14586339628622882503, 0.60376757838765170521),
    (1.5, 2.2878787878787880672, -0.23095076874541384567, 0.50024976663469250852),
    (1.5, 2.5858585858585860784, -0.2805828602895616902, 0.3926112307036522589),
    (1.5, 2.8838383838383836455, -0.29955101998931758806, 0.28983463787655799188),
    (1.5, 3.1818181818181816567, -0.29387043518627772684, 0.19821887835113019807),
    (1.5, 3.4797979797979796679, -0.26997196410030621566, 0.12160061560569410012),
    (1.5, 3.7777777777777776791, -0.23408223786640058849, 0.06170033664217320631),
    (1.5, 4.0757575757575761344, -0.19178619506750791467, 0.018537649093922429743),
    (1.5, 4.3737373737373737015, -0.14775579508344617837, -0.0091321617678973932457),
    (1.5, 4.6717171717171721568, -0.10562122652697885593, -0.023398328347718642981),
    (1.5, 4.9696969696969697239, -0.067956753562267910953, -0.02681885761590910534),
    (1.5, 5.267676767676767291, -0.036352125001628089787, -0.0221059472567640314),
    (1.5, 5.5656565656565657463, -0.011541648998767528885, -0.011880685787841424837),
    (1.5, 5.8636363636363633134, 0.006434040297364443344, 0.0015021637182111147651),
    (1.5, 6.1616161616161617687, 0.018054470123781186006, 0.016064018500688658127),
    (1.5, 6.4595959595959593358, 0.024150458588793647349, 0.030255443157644835792),
    (1.5, 6.7575757575757577911, 0.025751659769291114652, 0.04296284800971164358),
    (1.5, 7.0555555555555553582, 0.023957986745281590766, 0.053480324833445819592),
    (1.5, 7.3535353535353538135, 0.01983861359298842001, 0.061457742761635662664),
    (1.5, 7.6515151515151513806, 0.014359188423148855306, 0.066835170162483902248),
    (1.5, 7.9494949494949498359, 0.0083355668586335333521, 0.069772137024940269622),
    (1.5, 8.247474747474747403, 0.0024107825543010320459, 0.070578452120543570333),
    (1.5, 8.5454545454545449701, -0.0029489589403056959869, 0.069651441196244978283),
    (1.5, 8.8434343434343443136, -0.0074438447953318141631, 0.06742272975369645359),
    (1.5, 9.1414141414141418807, -0.010920082907450240084, 0.064316162232816236688),
    (1.5, 9.4393939393939394478, -0.013343697069294194086, 0.060717191006541960322),
    (1.5, 9.7373737373737370149, -0.01477198198882005129, 0.056953108984723877278),
    (1.5, 10.035353535353534582, -0.015325390627274025139, 0.053282834961427612899),
    (1.5, 10.333333333333333925, -0.015161880080531443609, 0.04989456578189460789),
    (1.5, 10.631313131313131493, -0.014455033613032290785, 0.046909444595698348962),
    (1.5, 10.92929292929292906, -0.013376649831902473502, 0.044389413136965694811),
    (1.5, 11.227272727272726627, -0.012083972032145765908, 0.042347569432077932396),
    (1.5, 11.52525252525252597, -0.01071133295865123521, 0.04075959415659858905),
    (1.5, 11.823232323232323537, -0.0093657119924563531232, 0.039575097850140805451),
    (1.5, 12.121212121212121104, -0.0081255334965694926765, 0.038728043174491783625),
    (1.5, 12.419191919191918672, -0.007041961253389682986, 0.03814568500660757984),
    (1.5, 12.717171717171718015, -0.0061419458841842512454, 0.037755727845261530265),
    (1.5, 13.015151515151515582, -0.0054323401978072573365, 0.037491613441505849194),
    (1.5, 13.313131313131313149, -0.0049044926969070095845, 0.037296016619827996637),
    (1.5, 13.611111111111110716, -0.0045388451262803123131, 0.0371227438258744775),
    (1.5, 13.909090909090908283, -0.0043091819184520561029, 0.036937300629333071067),
    (1.5, 14.207070707070707627, -0.0041862967559590226223, 0.036716427328030750816),
    (1.5, 14.505050505050505194, -0.0041409464724881038512, 0.036446903425602882139),
    (1.5, 14.803030303030302761, -0.0041460503404510708439, 0.036123900030576637275),
    (1.5, 15.101010101010100328, -0.0041781611749544336464, 0.035749121823264442482),
    (1.5, 15.398989898989899672, -0.0042182834230877896912, 0.035328934049673137665),
    (1.5, 15.696969696969697239, -0.0042521438512119618959, 0.034872620813673667915),
    (1.5, 15.994949494949494806, -0.0042700349864978213914, 0.034390873272843770581),
    (1.5, 16.292929292929294149, -0.0042663531019288732325, 0.033894563441018300221),
    (1.5, 16.59090909090908994, -0.0042389444594394299397, 0.033393823204612500636),
    (1.5, 16.888888888888889284, -0.0041883588613099793695, 0.032897419867904677981),
    (1.5, 17.186868686868688627, -0.0041170911217363199373, 0.0324123992004018368),
    (1.5, 17.484848484848484418, -0.0040288712367993039175, 0.031943954069368592661),
    (1.5, 17.782828282828283761, -0.003928044673538848867, 0.031495470365032642018),
    (1.5, 18.080808080808079552, -0.0038190666704891457693, 0.031068700872375619187),
    (1.5, 18.378787878787878896, -0.0037061196077597732042, 0.030664020720892344245),
    (1.5, 18.676767676767678239, -0.0035928508012005925807, 0.030280723786742134721),
    (1.5, 18.97474747474747403, -0.0034822195878473369143, 0.029917326780101828198),
    (1.5, 19.272727272727273373, -0.0033764371170012918398, 0.029571855747297319241),
    (1.5, 19.570707070707069164, -0.0032769794767563630586, 0.029242097578548427145),
    (1.5, 19.868686868686868507, -0.0031846541943242174028, 0.028925806273754596384),
    (1.5, 20.166666666666667851, -0.0030997012301851690292, 0.028620859815210142582),
    (1.5, 20.464646464646463642, -0.0030219118274116975964, 0.028325368337347574447),
    (1.5, 20.762626262626262985, -0.0029507515088975168103, 0.028037737824103001),
    (1.5, 21.060606060606062329, -0.0028854767354979725388, 0.027756695869660820602),
    (1.5, 21.358585858585858119, -0.0028252379274177271836, 0.027481287250849087985),
    (1.5, 21.656565656565657463, -0.0027691644745055996372, 0.027210847368512885553),
    (1.5, 21.954545454545453254, -0.0027164298642107842455, 0.02694496123008478001),
    (1.5, 22.252525252525252597, -0.0026662970563610366784, 0.026683414774565330129),
    (1.5, 22.55050505050505194, -0.0026181457087412181418, 0.026426144175852923518),
    (1.5, 22.848484848484847731, -0.0025714838297358686911, 0.026173187465495400308),
    (1.5, 23.146464646464647075, -0.0025259469594662636242, 0.025924641523591776732),
    (1.5, 23.444444444444442865, -0.0024812881341110486906, 0.025680626294626605921),
    (1.5, 23.742424242424242209, -0.002437361753623739896, 0.025441257058472332732),
    (1.5, 24.040404040404041552, -0.0023941041352621368853, 0.025206624761288717822),
    (1.5, 24.338383838383837343, -0.0023515130723792738841, 0.024976783797714908743),
    (1.5, 24.636363636363636687, -0.0023096281973473300439, 0.024751746226680037197),
    (1.5, 24.93434343434343603, -0.0022685134238311530655, 0.024531481176910191278),
    (1.5, 25.232323232323231821, -0.0022282422576130101971, 0.024315918124930827482),
    (1.5, 25.530303030303031164, -0.0021888863441492034601, 0.02410495277423395805),
    (1.5, 25.828282828282826955, -0.002150507280362929602, 0.023898454395110568858),
    (1.5, 26.126262626262626299, -0.0021131514631165756616, 0.023696273668585732474),
    (1.5, 26.424242424242425642, -0.0020768475747465238788, 0.023498250287242044636),
    (1.5, 26.722222222222221433, -0.0020416062087169649715, 0.023304219777979721774),
    (1.5, 27.020202020202020776, -0.0020074211040224638005, 0.023114019210017322107),
    (1.5, 27.318181818181816567, -0.0019742714718628611745, 0.022927491624190651947),
    (1.5, 27.61616161616161591, -0.0019421249484888216173, 0.022744489160269490604),
    (1.5, 27.914141414141415254, -0.0019109407809937819499, 0.022564874965136514956),
    (1.5, 28.212121212121211045, -0.0018806729368586581051, 0.022388524037075934931),
    (1.5, 28.510101010101010388, -0.0018512729139641563615, 0.022215323203276928703),
    (1.5, 28.808080808080809732, -0.0018226921085431593952, 0.022045170443653773537),
    (1.5, 29.106060606060605522, -0.0017948836693272081885, 0.02187797376966915423),
    (1.5, 29.404040404040404866, -0.0017678038241248729876, 0.021713649847619645698),
    (1.5, 29.702020202020200657, -0.0017414127091363528587, 0.021552122527088268968),
    (1.5, 30.0, -0.0017156747616875469052, 0.021393321401637744062),
    (1.8000000000000000444, 0.5, 0.83477052532615193873, 0.52112581603953815474),
    (1.8000000000000000444, 0.7979797979797980112, 0.63460251198887216553, 0.72500418604606434888),
    (1.8000000000000000444, 1.0959595959595960224, 0.39393120554409339958, 0.84955698262610808517),
    (1.8000000000000000444, 1.3939393939393940336, 0.13896104569618280956, 0.89324533916751940011),
    (1.8000000000000000444, 1.6919191919191918227, -0.1063317127110541808, 0.86065531817594860155),
    (1.8000000000000000444, 1.9898989898989898339, -0.32156212627757206955, 0.76204302828779497669),
    (1.8000000000000000444, 2.2878787878787880672, -0.4911081017451014935, 0.61208424982558586789),
    (1.8000000000000000444, 2.5858585858585860784, -0.60485864089737991209, 0.42827358606907608582),
    (1.8000000000000000444, 2.8838383838383836455, -0.65846761350568094812, 0.22920859584011155129),
    (1.8000000000000000444, 3.1818181818181816567, -0.65312029494792181306, 0.032935627933848281088),
    (1.8000000000000000444, 3.4797979797979796679, -0.59487089989497696237, -0.1445019907707817709),
    (1.8000000000000000444, 3.7777777777777776791, -0.4936441135741003412, -0.29020830306802513844),
    (1.8000000000000000444, 4.0757575757575761344, -0.36201474030803661433, -0.39520446070569747356),
    (1.8000000000000000444, 4.3737373737373737015, -0.21388801976132972699, -0.45479549231461804108),
    (1.8000000000000000444, 4.6717171717171721568, -0.063200005436834356692, -0.46854264111204907065),
    (1.8000000000000000444, 4.9696969696969697239, 0.077255692668248907243, -0.43988218074268145257),
    (1.8000000000000000444, 5.267676767676767291, 0.19678933868913305534, -0.37545728727741021535),
    (1.8000000000000000444, 5.5656565656565657463, 0.28750523299575552463, -0.28424707276729243097),
    (1.8000000000000000444, 5.8636363636363633134, 0.34468964684323176333, -0.17658562550543026429),
    (1.8000000000000000444, 6.1616161616161617687, 0.36689387150105149245, -0.063163997118130020692),
    (1.8000000000000000444, 6.4595959595959593358, 0.35573548101230587244, 0.045899625835026796701),
    (1.8000000000000000444, 6.7575757575757577911, 0.31546220888190949971, 0.14185041356742113612),
    (1.8000000000000000444, 7.0555555555555553582, 0.25233833503910164541, 0.21789555600147705369),
    (1.8000000000000000444, 7.3535353535353538135, 0.17392244136009419719, 0.26957982659449507901),
    (1.8000000000000000444, 7.6515151515151513806, 0.088307712441529445575, 0.29492853088307508334),
    (1.8000000000000000444, 7.9494949494949498359, 0.0033920912708495601614, 0.29436873610058948183),
    (1.8000000000000000444, 8.247474747474747403, -0.073763521784100960571, 0.27045717172328812664),
    (1.8000000000000000444, 8.5454545454545449701, -0.13744393379973959355, 0.22745658744622386089),
    (1.8000000000000000444, 8.8434343434343443136, -0.18362567803287797926, 0.17081093591030726697),
    (1.8000000000000000444, 9.1414141414141418807, -0.21014739793828910651, 0.10657326745930988957),
    (1.8000000000000000444, 9.4393939393939394478, -0.21670759199256357576, 0.040838886110555200135),
    (1.8000000000000000444, 9.7373737373737370149, -0.20470687644414593084, -0.020769290582821200834),
    (1.8000000000000000444, 10.035353535353534582, -0.17696325565195914533, -0.073525210947334206645),
    (1.8000000000000000444, 10.333333333333333925, -0.13733672247920792083, -0.11390733162370785983),
    (1.8000000000000000444, 10.631313131313131493, -0.090303532544079538633, -0.13977515193613324019),
    (1.8000000000000000444, 10.92929292929292906, -0.040520744034769347948, -0.15041274964008645811),
    (1.8000000000000000444, 11.227272727272726627, 0.0075815604864422963434, -0.14644874917579290089),
    (1.8000000000000000444, 11.52525252525252597, 0.050148949911089810324, -0.12967157252537135576),
    (1.8000000000000000444, 11.823232323232323537, 0.084168835096855102078, -0.10276573743975691193),
    (1.8000000000000000444, 12.121212121212121104, 0.10763999625729749455, -0.068999045405089454006),
    (1.8000000000000000444, 12.419191919191918672, 0.11964075671844686232, -0.031891679757528842056),
    (1.8000000000000000444, 12.717171717171718015, 0.12030005986901067367, 0.0051033007446858274055),
    (1.8000000000000000444, 13.015151515151515582, 0.11068341742996845505, 0.038882440554778027006),
    (1.8000000000000000444, 13.313131313131313149, 0.092611648278654495323, 0.066917326199367994263),
    (1.8000000000000000444, 13.611111111111110716, 0.06843419274239830006, 0.087409716792682646861),
    (1.8000000000000000444, 13.909090909090908283, 0.040780448876113703446, 0.099370289037291811761),
    (1.8000000000000000444, 14.207070707070707627, 0.012312112318267546751, 0.10262191278556930181),
    (1.8000000000000000444, 14.505050505050505194, -0.014502842130017178787, 0.097734602246179483136),
    (1.8000000000000000444, 14.803030303030302761, -0.037577740139035111614, 0.0859043062801620782),
    (1.8000000000000000444, 15.101010101010100328, -0.055344421498605572777, 0.068791207777742615644),
    (1.8000000000000000444, 15.398989898989899672, -0.06683355033479387347, 0.048335051867950118328),
    (1.8000000000000000444, 15.696969696969697239, -0.071696891698696414969, 0.026565223691444033859),
    (1.8000000000000000444, 15.994949494949494806, -0.070175394607389201422, 0.0054219939310353156978),
    (1.8000000000000000444, 16.292929292929294149, -0.063021081721520918676, -0.013397198880130459485),
    (1.8000000000000000444, 16.59090909090908994, -0.051383827101849562344, -0.028556020063565471669),
    (1.8000000000000000444, 16.888888888888889284, -0.036675953969568148755, -0.039155646535058381934),
    (1.8000000000000000444, 17.186868686868688627, -0.020428170162886806629, -0.04476702882038884934),
    (1.8000000000000000444, 17.484848484848484418, -0.0041497553263517262055, -0.04542064621868278663),
    (1.8000000000000000444, 17.782828282828283761, 0.010795711730758461041, -0.041558791946483573418),
    (1.8000000000000000444, 18.080808080808079552, 0.023290208033642971049, -0.033958067262680077977),
    (1.8000000000000000444, 18.378787878787878896, 0.032530743570753313341, -0.023631503022816264702),
    (1.8000000000000000444, 18.676767676767678239, 0.038065629817167421584, -0.011720506945792178102),
    (1.8000000000000000444, 18.97474747474747403, 0.039797767759910854287, 0.00061331585686305399536),
    (1.8000000000000000444, 19.272727272727273373, 0.037957922553544308047, 0.012287398731909451185),
    (1.8000000000000000444, 19.570707070707069164, 0.033053173238634411479, 0.022381075939820280364),
    (1.8000000000000000444, 19.868686868686868507, 0.025797294451900110693, 0.030196743324237589468),
    (1.8000000000000000444, 20.166666666666667851, 0.017030675594146004595, 0.035296329742507057475),
    (1.8000000000000000444, 20.464646464646463642, 0.0076375112336030450206, 0.037512452736972622401),
    (1.8000000000000000444, 20.762626262626262985, -0.001532535328322275066, 0.03693581320823267375),
    (1.8000000000000000444, 21.060606060606062329, -0.0097320759807129844052, 0.033882220505667201094),
    (1.8000000000000000444, 21.358585858585858119, -0.016368518387499985275, 0.02884401147573286647),
    (1.8000000000000000444, 21.656565656565657463, -0.021038462321385394234, 0.022431465386032913035),
    (1.8000000000000000444, 21.954545454545453254, -0.023542873573819644846, 0.015310103549911390295),
    (1.8000000000000000444, 22.252525252525252597, -0.023883654723167280904, 0.0081395281061401522693),
    (1.8000000000000000444, 22.55050505050505194, -0.022243728798919893135, 0.0015187696330130164047),
    (1.8000000000000000444, 22.848484848484847731, -0.018953924310123625708, -0.0040579202875982947224),
    (1.8000000000000000444, 23.146464646464647075, -0.014450731928960194333, -0.00823215696252626017),
    (1.8000000000000000444, 23.444444444444442865, -0.0092293672754088277136, -0.01079807778404370054),
    (1.8000000000000000444, 23.742424242424242209, -0.0037965313074680687301, -0.011704589124276554742),
    (1.8000000000000000444, 24.040404040404041552, 0.00137314659829361049, -0.011044433325835177104),
    (1.8000000000000000444, 24.338383838383837343, 0.0058736979251490885446, -0.0090322869702262724032),
    (1.8000000000000000444, 24.636363636363636687, 0.009395058053372257698, -0.0059748026269913014777),
    (1.8000000000000000444, 24.93434343434343603, 0.011739600860644404953, -0.0022358945505693291389),
    (1.8000000000000000444, 25.232323232323231821, 0.012827633226037731965, 0.0017993574627243905059),
    (1.8000000000000000444, 25.530303030303031164, 0.012692474769005725799, 0.0057590278720452097774),
    (1.8000000000000000444, 25.828282828282826955, 0.011466558702855455449, 0.0093141898810706544484),
    (1.8000000000000000444, 26.126262626262626299, 0.0093606003173066417931, 0.012202225715311303889),
    (1.8000000000000000444, 26.424242424242425642, 0.0066382588525290556567, 0.014242293309140019672),
    (1.8000000000000000444, 26.722222222222221433, 0.0035888573814156195466, 0.015342425495208972505),
    (1.8000000000000000444, 27.020202020202020776, 0.00050063578522423145498, 0.015498489905101399788),
    (1.8000000000000000444, 27.318181818181816567, -0.0023632760602257996665, 0.014785896855885730554),
    (1.8000000000000000444, 27.61616161616161591, -0.0047844205546118681953, 0.013345462477257632703),
    (1.8000000000000000444, 27.914141414141415254, -0.0066029110716900150813, 0.011365185364217662516),
    (1.8000000000000000444, 28.212121212121211045, -0.0077250601481329703315, 0.0090598643389182138097),
    (1.8000000000000000444, 28.510101010101010388, -0.0081247149228209381439, 0.0066504761635669543298),
    (1.8000000000000000444, 28.808080808080809732, -0.0078388066641855824014, 0.0043450634996465022723),
    (1.8000000000000000444, 29.106060606060605522, -0.0069580558482423470294, 0.0023225848804012765515),
    (1.8000000000000000444, 29.404040404040404866, -0.0056140873173882946093, 0.00072078772810491116376),
    (1.8000000000000000444, 29.702020202020200657, -0.0039643872974487301134, -0.00037127571362294503529),
    (1.8000000000000000444, 30.0, -0.0021765739897422305138, -0.0009159193533926628345),
];

pub const WRIGHT_M: &[(f64, f64, f64)] = &[
    (0.5, 0.0, 0.56418958354775628695),
    (0.5, 0.050000000000000002776, 0.56383707522836362955),
    (0.5, 0.2999999999999999889, 0.55163706332541192171),
    (0.5, 0.80000000000000004441, 0.48077064941965388538),
    (0.5, 1.1999999999999999556, 0.3936217158571436449),
    (0.5, 2.0, 0.20755374871029735167),
    (0.5, 3.0, 0.059465144611814685766),
    (0.5, 4.0, 0.010333492677046026929),
    (0.75, 0.0, 0.27581566283020931436),
    (0.75, 0.050000000000000002776, 0.29023890247137458052),
    (0.75, 0.2999999999999999889, 0.37150100110118916037),
    (0.75, 0.80000000000000004441, 0.55380017847071472712),
    (0.75, 1.1999999999999999556, 0.62323017339093142219),
    (0.75, 2.0, 0.22514007014896749913),
    (0.75, 3.0, 0.00035126361023134093759),
    (0.75, 4.0, 4.5046280751923516817e-12),
    (0.9000000000000000222, 0.0, 0.10511370061117775642),
    (0.9000000000000000222, 0.050000000000000002776, 0.11434837006750702945),
    (0.9000000000000000222, 0.2999999999999999889, 0.18194069450750165885),
    (0.9000000000000000222, 0.80000000000000004441, 0.59406388434599555318),
    (0.9000000000000000222, 1.1999999999999999556, 1.4708020405379754878),
    (0.9000000000000000222, 1.5, 0.45575251057063775959),
    (0.9000000000000000222, 2.0, 7.8193669162217516934e-17),
];

