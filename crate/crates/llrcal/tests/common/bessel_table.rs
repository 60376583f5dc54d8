//! 200-point oracle for the order-one modified Bessel function: rows of
//! (x, K1(x), e^x K1(x)) on a log grid over [1e-6, 700], frozen from a
//! 50-digit computation.

pub const BESSEL_K1_TABLE: [(f64, f64, f64); 200] = [
    (1e-06, 999999.99999278432, 1000000.9999932843),
    (
        1.1077652280745665e-06,
        902718.35100776021,
        902719.35100831408,
    ),
    (
        1.2271438005310966e-06,
        814900.42125176957,
        814901.42125238314,
    ),
    (
        1.3593872320756207e-06,
        735625.56451267376,
        735626.56451335344,
    ),
    (
        1.5058819071819037e-06,
        664062.69655998050,
        664063.69656073342,
    ),
    (
        1.6681636143627248e-06,
        599461.58240758314,
        599462.58240841721,
    ),
    (
        1.8479336467302171e-06,
        541144.97116594763,
        541145.97116687157,
    ),
    (
        2.0470766376367648e-06,
        488501.49602884794,
        488502.49602987145,
    ),
    (
        2.2676803183778075e-06,
        440979.26496110021,
        440980.26496223401,
    ),
    (
        2.5120574050879974e-06,
        398080.07489476218,
        398081.07489601817,
    ),
    (
        2.7827698442837096e-06,
        359354.18877786764,
        359355.18877925898,
    ),
    (
        3.0826556712319697e-06,
        324395.62072047255,
        324396.62072201382,
    ),
    (
        3.414858762717639e-06,
        292837.87980946794,
        292838.87981117529,
    ),
    (
        3.782861796124338e-06,
        264350.12797210676,
        264351.12797399810,
    ),
    (
        4.190522760358242e-06,
        238633.71160890209,
        238634.71161099724,
    ),
    (4.64211540137991e-06, 215419.03063499644, 215420.03063731737),
    (
        5.1423740263580735e-06,
        194462.71210634936,
        194463.71210892038,
    ),
    (
        5.696543136153279e-06,
        175545.05880023021,
        175546.05880307828,
    ),
    (
        6.310432406457444e-06,
        158467.74600200802,
        158468.74600516299,
    ),
    (
        6.990477593988467e-06,
        143051.74235231984,
        143052.74235581479,
    ),
    (
        7.743808006254781e-06,
        129135.43295765555,
        129136.43296152709,
    ),
    (
        8.578321242214482e-06,
        116572.92508783950,
        116573.92509212822,
    ),
    (
        9.502765987378625e-06,
        105232.51869805516,
        105233.51870280601,
    ),
    (
        1.0526833731347717e-05,
        94995.325741009203,
        94996.325746271969,
    ),
    (
        1.1661260369309445e-05,
        85754.023794684911,
        85755.023800514750,
    ),
    (
        1.2917938752644982e-05,
        77411.730939242884,
        77412.730945700890,
    ),
    (
        1.431004336857705e-05,
        69880.990087752143,
        69881.990094905994,
    ),
    (
        1.5852168455948694e-05,
        63082.852122902419,
        63083.852130827079,
    ),
    (
        1.7560481005080457e-05,
        56946.048227688850,
        56947.048236467359,
    ),
    (
        1.9452890245692044e-05,
        51406.242733132478,
        51407.242742856817,
    ),
    (
        2.154923539972856e-05,
        46405.358650206285,
        46406.358660978342,
    ),
    (
        2.3871493667412832e-05,
        41890.968815127675,
        41891.968827060309,
    ),
    (
        2.644401062696215e-05,
        37815.746265040689,
        37816.746278258910,
    ),
    (
        2.9293755463382988e-05,
        34136.968082058061,
        34137.968096700338,
    ),
    (
        3.245060370205504e-05,
        30816.067504172855,
        30817.067520392566,
    ),
    (
        3.594765041116437e-05,
        27818.229607559037,
        27819.229625526067,
    ),
    (
        3.982155715646829e-05,
        25112.026321564357,
        25113.026341466879,
    ),
    (
        4.411293634571948e-05,
        22669.086950046414,
        22670.086972092849,
    ),
    (
        4.886677699205478e-05,
        20463.800744936200,
        20464.800769357399,
    ),
    (
        5.413291635987255e-05,
        18473.048413935661,
        18474.048440987311,
    ),
    (
        5.996656243773565e-05,
        16675.959747588884,
        16676.959777554177,
    ),
    (
        6.642887271568597e-05,
        15053.694824791217,
        15054.694857983805,
    ),
    (
        7.358759533462822e-05,
        13589.246502986956,
        13590.246539754219,
    ),
    (
        8.151777932932334e-05,
        12267.262122445979,
        12268.262163172647,
    ),
    (
        9.030256141088005e-05,
        11073.882555442000,
        11074.882600554157,
    ),
    (
        0.0001000340375370411,
        9996.5969129918043,
        9997.5969629613254,
    ),
    (
        0.0001108142284074401,
        9024.1113859620707,
        9025.1114413115264,
    ),
    (0.000122756149005675, 8146.2308455291603, 8147.2309068372503),
    (
        0.00013598499340082703,
        7353.7519617409461,
        7354.7520296485076,
    ),
    (
        0.0001506394472293856,
        6638.3667196806745,
        6639.3667948973309,
    ),
    (
        0.00016687314161708698,
        5992.5753217369663,
        5993.5754050484828,
    ),
    (
        0.0001848562637829718,
        5409.6075628840030,
        5410.6076551604228,
    ),
    (0.000204777341210556, 4883.3518547034667, 4884.3519569081089),
    (
        0.00022684521809061492,
        4408.2911540659708,
        4409.2912672653816,
    ),
    (
        0.00025129124475577484,
        3979.4451247752588,
        3980.4452501502131,
    ),
    (
        0.00027837170306002266,
        3592.3179258222213,
        3593.3180646798855,
    ),
    (
        0.0003083704931297915,
        3242.8510788827900,
        3243.8512326701643,
    ),
    (
        0.00034160210965339003,
        2927.3809209424183,
        2928.3810912611908,
    ),
    (
        0.00037841493891094073,
        2642.6001959984106,
        2643.6003846213683,
    ),
    (
        0.00041919491110950144,
        2385.5233831837006,
        2386.5235920728554,
    ),
    (
        0.0004643695463129145,
        2153.4553978267647,
        2154.4556291533682,
    ),
    (
        0.0005144124363822088,
        1943.9633373227990,
        1944.9635934894375,
    ),
    (
        0.0005698482099133309,
        1754.8509756118137,
        1755.8512592767905,
    ),
    (
        0.0006312580322225246,
        1584.1357388745349,
        1585.1360529787691,
    ),
    (0.000699285698038887, 1430.0279210690686, 1431.0282688657579),
    (
        0.0007746443807773302,
        1290.9119214128152,
        1291.9123065001339,
    ),
    (
        0.0008581241091484807,
        1165.3293071113709,
        1166.3297334684978,
    ),
    (
        0.0009506000494871509,
        1051.9635237712680,
        1052.9639957980639,
    ),
    (0.001053041680627828, 949.62609320704714, 950.62661576772898),
    (
        0.0011665229575127107,
        857.24415394637423,
        858.24473241756137,
    ),
    (0.001292233570083286, 773.84921381321070, 774.84985413674678),
    (
        0.0014314914154889228,
        698.56699667596900,
        699.56770541695560,
    ),
    (
        0.0015857564143658706,
        630.60827691836717,
        631.60906132887554,
    ),
    (
        0.0017566458160307157,
        569.26060554557617,
        570.26147363453576,
    ),
    (0.001945951153041499, 513.88084118580153, 514.88180179559577),
    (
        0.0021556570228709816,
        463.88840768563933,
        464.88947057597060,
    ),
    (
        0.0023879618935912146,
        418.75920761487192,
        419.76038355448739,
    ),
    (
        0.0026453011516874457,
        378.02012787266817,
        379.02142873956561,
    ),
    (0.002930372633624957, 341.24407979451511, 342.24551868527148),
    (
        0.0032461649088310184,
        308.04552176271926,
        309.04711311160333,
    ),
    (0.003595988610598848, 278.07641738170471, 279.07817709024617),
    (0.003983511143373576, 251.02258684564721, 252.02453242333636),
    (0.004412795130276807, 226.60041324807935, 227.60256396486102),
    (0.004888341003937424, 204.55386930420515, 205.55624635540351),
    (0.005415134187132997, 184.65183331577436, 185.65446000003952),
    (0.005998697357863767, 166.68566624071307, 167.68856815150859),
    (0.006645148346784256, 150.46702446706998, 151.47022969811913),
    (0.00736126427396479, 135.82588536192052, 136.82942472688942),
    (0.008154552597365765, 122.60876489657612, 123.61267216308758),
    (0.009033329817866935, 110.67710866316244, 111.68142080099432),
    (0.010006808665962149, 99.905839415467613, 100.91059685848418),
    (0.01108519468414811, 90.182045907979379, 91.187292828959974),
    (0.012279793217536304, 81.403799288430153, 82.409583885482254),
    (0.01360312793433262, 73.479084636485293, 74.485459429141976),
    (0.015069072118703482, 66.324836448459452, 67.331858580845413),
    (0.016692994112447655, 59.866067957787491, 60.873799505371703),
    (0.018491918430222975, 54.035085164834127, 55.043593440247002),
    (0.020484704237392234, 48.770777337815135, 49.780135189967123),
    (0.02269224306157485, 44.017976548432518, 45.028262647700348),
    (0.025137677810628964, 39.726879529702372, 40.738178630217046),
    (0.027846645393156365, 35.852525796962772, 36.864928965006441),
    (0.03084754548506144, 32.354326563039615, 33.367931358201543),
    (0.03417183825979965, 29.195639511200668, 30.210550104220074),
    (0.037854374203594165, 26.343384970421331, 27.359712178522157),
    (0.04193375947326448, 23.767699471653010, 24.785560688620573),
    (0.04645276062692484, 21.441623055767343, 22.461142050002391),
    (0.05145875297057864, 19.340817057742721, 20.362123607036479),
    (0.05700421722088583, 17.443309411154201, 18.466538737953546),
    (0.06314728969090673, 15.729264805450565, 16.754556770939426),
    (0.06995237176673802, 14.180777288845015, 15.208275298296977),
    (0.07749080506453741, 12.781683144599758, 13.811532710233779),
    (0.08584161934599907, 11.517392080463178, 12.549738981582855),
    (0.09509236103311079, 10.374734962183093, 11.409722935884712),
    (0.105340011007993, 9.3418264942996715, 10.379594383758257),
    (0.11669200131964672, 8.4079414065324478, 9.4486196881784829),
    (0.1292673414563361, 7.5634028435349078, 8.6071094497979228),
    (0.143197865990971, 6.7994817809323334, 7.8463171322763064),
    (0.15862961667927922, 6.1083064025495773, 7.1583475620554440),
    (0.1757243735001028, 5.4827804735866830, 6.5360743403425168),
    (0.19466135068860171, 4.9165098330832233, 5.9730652983363614),
    (0.21563907554286207, 4.4037362070781597, 5.4635152109353078),
    (0.2388774697005273, 3.9392776120738907, 5.0021850601935042),
    (0.26462015470468, 3.5184746773373059, 4.5843472084517042),
    (0.29313700602955695, 3.1371422647773610, 4.2057359030863775),
    (0.3247269823414277, 2.7915258072172502, 3.8625025908552945),
    (0.35972125965541746, 2.4782618205198205, 3.5511755704615272),
    (0.3984867032454539, 2.1943420731106492, 3.2686235577458154),
    (0.44142971370538236, 1.9370809191630156, 3.0120227793303898),
    (0.4890004874817335, 1.7040853206901697, 2.7788272480080404),
    (0.5416977365437768, 1.4932271012418742, 2.5667419070858982),
    (0.6000739166698934, 1.3026169927550688, 2.3736983616009819),
    (0.6647410191614229, 1.1305800611218495, 2.1978329421335732),
    (0.7363769867018735, 0.97563212982951525, 2.0374668721308074),
    (0.815732820622663, 0.83645686996304414, 1.8910883324617444),
    (0.9036404540849737, 0.71188329472150681, 1.7573362375745573),
    (1.001021473716846, 0.60086349293339747, 1.6349855563098775),
    (1.1088967811394805, 0.50245056311353031, 1.5229340273140076),
    (1.2283972956701295, 0.41577686881362747, 1.4201901342453681),
    (1.3607758104042016, 0.34003292400897403, 1.3258622197152045),
    (1.5074201259707636, 0.27444742362011709, 1.2391486292740912),
    (1.6698675996501948, 0.21826913942315522, 1.1593287878631993),
    (1.8498212623808272, 0.17075157555484939, 1.0857551210989861),
    (2.0491676726184798, 0.13114138069661734, 1.0178457426503201),
    (2.269996694221239, 0.098671499663859500, 0.95507783689090280),
    (2.514623405702503, 0.072559870768173274, 0.89698167305548556),
    (
        2.7856123705396767,
        0.052014105756713043,
        0.84313519338020849,
    ),
    (3.085804522978219, 0.036242024320870024, 0.79315912324618385),
    (3.418346951190496, 0.024467197976152517, 0.74671255624836458),
    (3.786725890023539, 0.015947886453894824, 0.70348897145203915),
    (
        4.1948032692177915,
        0.0099970734931524510,
        0.66321264394591169,
    ),
    (
        4.646857200252985,
        0.0060009068182429944,
        0.62563541321778630,
    ),
    (5.14762682626819, 0.0034328815422882017, 0.59053377692517199),
    (
        5.702362005243739,
        0.0018616634933062795,
        0.55770628036170642,
    ),
    (
        6.3168783473025725,
        0.00095148391447102744,
        0.52697117437818033,
    ),
    (
        6.9976181831189255,
        0.00045535032682966175,
        0.49816431674497143,
    ),
    (
        7.751718102601471,
        0.00020259050451178652,
        0.47113729397563283,
    ),
    (
        8.587083771898065,
        8.3133075782024331e-5,
        0.44575574249814087,
    ),
    (
        9.512472813072069,
        3.1188383086886022e-5,
        0.42189784978439918,
    ),
    (
        10.537586615325894,
        1.0593756509693150e-5,
        0.39945301764865425,
    ),
    (
        11.67317204028199,
        3.2230412834492573e-6,
        0.37832067141592359,
    ),
    (
        12.931134087556632,
        8.6787858077021283e-7,
        0.35840920005325413,
    ),
    (
        14.324660701764977,
        2.0412272538134832e-7,
        0.33963501365766984,
    ),
    (
        15.86836102938146,
        4.1324597145595316e-8,
        0.32192170591090948,
    ),
    (
        17.578418574882317,
        7.0855466241816775e-9,
        0.30519931024680115,
    ),
    (
        19.472760861794708,
        1.0106281683962898e-9,
        0.28940363953562502,
    ),
    (
        21.571247377307508,
        1.1755204742876111e-10,
        0.27447570007370265,
    ),
    (
        23.895877770775947,
        1.0907578847197296e-11,
        0.26036117157805947,
    ),
    (
        26.471022488785582,
        7.8794416367276898e-13,
        0.24700994572762352,
    ),
    (
        29.323678264656543,
        4.3132134758483231e-14,
        0.23437571656645197,
    ),
    (
        32.48375114083247,
        1.7364065114415712e-15,
        0.22241561679353229,
    ),
    (
        35.98436999124174,
        4.9734083721624373e-17,
        0.21108989461064549,
    ),
    (
        39.862233830467495,
        9.7693655291179638e-19,
        0.20036162638771170,
    ),
    (
        44.15799655076953,
        1.2636540618337417e-20,
        0.19019646093728003,
    ),
    (
        48.91669312037913,
        1.0289100363255025e-22,
        0.18056239166985387,
    ),
    (
        54.18821171115037,
        5.0170030287514699e-25,
        0.17142955333313980,
    ),
    (
        60.027816705155395,
        1.3861968754505453e-27,
        0.16277004042469482,
    ),
    (
        66.49672806320474,
        2.0414028157887358e-30,
        0.15455774471242118,
    ),
    (
        73.66276312914843,
        1.4972711194760829e-33,
        0.14676820960445284,
    ),
    (
        81.60104759836389,
        5.0735400720499418e-37,
        0.13937849938260209,
    ),
    (
        90.39480310392514,
        7.3082906828216244e-41,
        0.13236708155495127,
    ),
    (
        100.13621967717516,
        4.0810793227329420e-45,
        0.12571372079646175,
    ),
    (
        110.92742222921085,
        7.9769104598571727e-50,
        0.11939938313451652,
    ),
    (
        122.88154118546551,
        4.8737285774740912e-55,
        0.11340614920178688,
    ),
    (
        136.12389849747143,
        8.2115817960742189e-61,
        0.10771713552418369,
    ),
    (
        150.79332146545062,
        3.3207633569152468e-67,
        0.10231642293917062,
    ),
    (
        167.04359814529633,
        2.7637844128878870e-74,
        0.097188991351428163,
    ),
    (
        185.04508959782044,
        3.9924325305058128e-82,
        0.092320660130611081,
    ),
    (
        204.98651588240816,
        8.2885229239576614e-91,
        0.087698033541402620,
    ),
    (
        227.07693451868664,
        2.0064550221305511e-100,
        0.083308450670721661,
    ),
    (
        251.54793215756632,
        4.4927974857429106e-111,
        0.079139939382112261,
    ),
    (
        278.6560524382121,
        7.1998455427976303e-123,
        0.075181173884214796,
    ),
    (
        308.6854854835744,
        6.2147775178269177e-136,
        0.071421435549827594,
    ),
    (
        341.9510472300201,
        2.1091168923992005e-150,
        0.067850576665336784,
    ),
    (
        378.8014798251001,
        1.9855967354476651e-166,
        0.064458986828030907,
    ),
    (
        419.6231076934353,
        3.5238526491749536e-184,
        0.061237561741735705,
    ),
    (
        464.84388759937684,
        7.6845957150336513e-204,
        0.058177674189928034,
    ),
    (
        514.9378951655918,
        1.2817758474317638e-225,
        0.055271146990560449,
    ),
    (
        570.4302948823491,
        9.6719607215392878e-250,
        0.052510227758726034,
    ),
    (
        631.9028457109878,
        1.8453269235942948e-276,
        0.049887565322432343,
    ),
    (700.0, 4.6731107967079661e-306, 0.047396187653494544),
];
