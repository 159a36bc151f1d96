// 300 draws of GEV(shape -0.28, scale 2.5, location 5), frozen test fixture.
const GEV_SAMPLE: [f64; 300] = [
    3.6907335454780954, 6.853584784206086, 9.060895996259129, 8.050783030423979, 6.350944629782813, 3.6770371235342787,
    6.558725861863098, 7.979702939048625, 3.7608622935601783, 5.620353022076783, 4.9513502653662815, 11.16946451450851,
    1.4585461626270964, 3.1524652160867257, 2.7015107506595513, 5.680133347721153, 0.8515932734913854, 6.392596306542103,
    10.271325011700586, 5.381978424086573, 5.877711866872978, 7.898259406177488, 2.8151123437013283, 2.693569301866975,
    2.544142239164745, 4.497063281667673, 5.525623079036516, 7.2770965565348416, -1.9161955649122149, 8.924636451315621,
    5.812700369221908, 4.512422328501175, 4.2221576921253625, 4.457865375001528, 6.02777690168203, 6.430166593376837,
    6.3824484677611375, 3.9078322612498297, 4.977101971661303, 11.870809771986602, 2.1200279776765707, 4.318447425261999,
    4.712614214224783, 2.5813386007459003, 4.804617059557693, 2.1950947254251703, 10.444950702899098, 7.305984643540631,
    1.6487292630736832, 10.37408926192293, 3.359676443278239, 7.710173714593962, 11.259028877489765, 7.604152141073701,
    10.518576782080963, 6.617094989879115, 9.292607317633362, 7.1780967868793635, 4.181245740497526, 0.12122949919617909,
    2.7860360743315193, 6.484723041825154, 3.55294675340411, 0.9133689518346371, 8.348370817740095, 2.3384251065401673,
    7.948156452601838, 2.5198549238694756, 7.338437858999191, 11.385744260996324, 4.655058655963249, 4.153876781081131,
    3.848815942750698, 8.666018952767185, 6.7061291174591044, 8.980964961744968, 5.898207179006617, 3.927518764807006,
    5.937407836995998, 1.9539588070067504, 5.307238189662523, 4.854577973207329, 4.785259228637207, 9.325095367691603,
    6.830581012246549, 4.580168446333063, 7.94813357908018, 2.0270596037632282, 4.0702616078515845, 3.70221930046024,
    6.1791485514543565, 5.259831983931124, 6.072315171948739, 5.776601708884291, 4.219729260344462, 8.938784343279522,
    7.957296785211898, 6.447626303412477, 9.209207128771155, 11.582829952318324, 6.210726671868701, 4.86251087637938,
    6.28754223383295, 5.7412995238089835, 5.478184938744785, 6.1522477376778095, 4.926371721822876, 7.391916415299365,
    5.991839460049616, 9.45990170194437, 4.092341112849232, 12.202383773575141, 6.853374137529421, 4.69841514668672,
    1.7477351989046808, 5.349695656121336, 5.547854118995837, 8.731088289715961, 1.9904357092949492, 6.569542915272821,
    11.858826281881306, 9.485560121447929, 5.238181457863479, 9.564825750930643, 9.577574012612313, 9.275690304216432,
    8.089582039531326, 6.234349150796433, 4.185698718686817, 6.7836980337829855, 2.99932474156844, 9.063380677507844,
    8.857853606496407, 4.323151659993142, 4.874429228166888, 7.320236423737526, 4.989010056172795, 3.7400895628764257,
    9.654189255694874, 3.2837124702608023, 4.514000740256242, 3.425719301564062, 4.994501657411464, 4.955312542052162,
    3.5015157563164303, 4.229946694384294, 4.242858481058736, 0.8877445371403319, 8.849584306223646, 1.682202772678067,
    2.7985526113695864, 6.6297940328606275, 8.494627788421239, 8.07113137843042, 6.5282477646813835, 2.8394325003486336,
    6.894490685372364, 7.360462251548906, 3.631265590586653, 4.996530496960468, 6.563339929384974, 7.501229145420766,
    6.948018732592331, 2.6339647395880537, 2.9971788134657515, 1.831156106902176, 11.701831507360966, 6.035110694155376,
    2.1670090502655803, 3.8665445008499475, 6.350510809048854, 6.3148910045222095, 1.0998657202285296, 9.632336901319668,
    6.025910307340117, 2.0415251234434435, 5.926702199007651, 0.7850350356845697, 5.185292165250353, 4.366280137294249,
    8.106456760584916, 4.198008272153982, 3.9990427252426226, 8.805338903884122, 6.015124615574381, 5.936781532646765,
    6.598293295349548, 6.4610321526775625, 4.908522781271235, 7.017671444869884, 2.091467144710177, 7.631076037359325,
    10.760202519464661, 9.856462977578605, 6.741782630017849, 2.2531338824321336, 5.586590208559745, 10.090253050795422,
    2.056838997891121, 5.475534465953697, 3.3354875444495313, 2.1953664454895403, 7.262151061874729, 6.251668999717171,
    8.341404207571877, 6.084457445285334, 3.974054273143747, 7.563392176745943, 7.553996589443899, 9.425873367920747,
    7.890239337684132, 3.466341872913038, 6.56689386941272, 9.605434399229418, 4.989853837708244, 6.165794196635571,
    6.765070974070851, 4.441136958751329, 7.5679697798193395, 5.986430211148328, 5.101888741649122, 6.9359802681886045,
    5.843114159230206, 4.321199767394436, 5.633011856012568, 4.826611533723904, 5.416851036947552, 9.517011921972944,
    6.7691164030646584, 7.35624534930256, 6.97229964518142, 9.431947246121172, 4.327559826045435, 8.392794628416684,
    2.9996359722833295, 4.499697759814547, 8.971824739455487, 7.963069709646321, 10.898628347656349, 3.420896138598568,
    6.964554939294901, 7.6702579339984105, 4.120110136881265, 4.770351754464818, 5.351861813155757, 8.459760211176956,
    5.836548605139084, 5.967625547490295, 7.628545129766305, 8.967966412429547, 6.726523128578843, 10.217584370018074,
    0.5355173459624183, 7.590198314775288, 5.350571940159325, 4.0523375448506265, 4.3996366154640345, 4.74912064630936,
    6.195419351775465, 6.485702123504197, 0.55434214432674, 9.527167750374215, 2.8219937149418746, 7.499568143144491,
    6.171668700533203, 6.281029242051948, 4.492732660312822, 3.2849268654499744, 8.312187476890507, 8.7631959409108,
    4.843592770142156, 8.748652455814678, 6.261378376448432, 3.5721486890712466, 5.754707030465826, 3.7903683915449466,
    6.172602282172119, 5.987289032912589, 10.90565789962156, 6.5005498699393245, 3.1708738893742527, 6.726302621964937,
    6.678651495673746, 6.397638469759615, 5.183053684762171, 8.31626424158405, 6.88884025333953, 7.082899679240845,
    7.600970059121874, 2.1613260323277594, 5.888897394710183, 3.2110547858027116, 2.4002901085871295, -0.014569536826015472,
    5.31830315139772, 3.1587640970410944, 7.360570846351273, 5.323091910832873, 7.161742981165752, 3.6752700018886095,
];
