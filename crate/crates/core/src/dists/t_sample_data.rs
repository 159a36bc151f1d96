// 300 draws of t(dof 2.3, location -5, scale 3), frozen test fixture.
const T_SAMPLE: [f64; 300] = [
    -5.056034174271103, -6.366021139138216, -5.957096220094353, -4.538024743352395, -5.102032823716299, -4.602218255563537,
    -5.899857350589957, -6.989083185642041, -18.00930358511705, -7.451808830307264, -9.034420324410073, -3.7082642288013643,
    -5.65829955202895, -2.4687172070289716, -13.490317679333135, -10.08294068756738, -6.724721082229625, -0.9703474367730678,
    -4.318042346780873, 0.15916488450396216, -5.491398837280954, 3.1318154506686806, -6.443882217893987, -0.4016513847872103,
    -4.378465738220447, -14.164131002922852, -5.400205517132459, -1.4489463605711914, -5.484884487657208, -3.4385530540235973,
    -3.8243373308838797, -7.994891225649313, -3.9221815204433814, -7.243838409852492, -3.613202703589427, -4.167952019075092,
    -5.3389221620913885, -8.953993570122556, -10.39139491176137, -8.197566207242385, -6.423551961743957, -4.97222575511324,
    1.7971257688699502, -8.591802170471755, 0.7851961267825693, -8.31953199951704, -2.482558501171706, -2.556606186567854,
    -7.475680578919789, -0.5551051923065238, -4.825699181927278, -10.189295287851301, -6.87330421227022, -4.727940210881522,
    -1.3590836333841967, -4.654590380351795, -5.694892018281083, -7.939568463350951, -3.428417288839887, 22.01104866613108,
    -12.25470228972156, -4.139746004265463, -8.529156743931141, -1.3035802186294356, -6.54924640483625, 0.8960747550170893,
    4.285247185940095, -5.216795930991427, -2.5968467723815802, -4.809470115959347, -4.447313642008982, -3.1455729739481137,
    -5.056271824083086, -4.70458327727249, -3.38289689317951, -12.650766049177513, -2.024065138071308, -13.721457463055359,
    -7.731606371276326, -35.72553184445367, 0.16454944693791607, -5.255228352615298, -13.034503566587148, -0.38614168203677757,
    1.8455059018933175, -2.822226435791718, -1.79852035934088, -2.1836039868057355, -9.198139026064162, -2.6875251042539707,
    -0.5901758576704497, 1.358501914745549, 2.118653648962937, -9.474144116197158, -7.576007866663477, -7.742218274742767,
    2.216785857061174, -8.406181687355412, -12.720206627178477, -3.3930925168928856, -4.867980063928429, -11.122087440130915,
    -5.903377739107443, -6.864673042126892, -3.9074453690332023, -9.431486089461954, -2.7585652463831045, -8.328651023284984,
    8.395448360047995, -5.0774201855886, 1.1099998816790837, 8.683904318054157, -5.8647961620908555, -7.200070691412106,
    -4.593028044783264, -0.653864282292238, -6.6500030694903725, 1.171133050018681, -6.2781541842518305, -11.660923105826225,
    -4.183653166332738, -24.130632458639266, -4.596024340345727, 6.5792830238411835, -11.315660572696155, -6.534153136295143,
    -4.223274235897324, -11.007617813881756, -3.977859286286058, -22.338552365916396, -1.000202905555831, -3.0394658439266857,
    10.011567602842549, -6.189960798568649, -3.806567366863793, -6.844823112805676, -8.026028313238891, -13.982749589118406,
    -6.48480581495884, -3.820894531172253, -7.347570378566691, -5.683396816206934, -6.42289755630973, -8.565320672168674,
    -1.6299403657546656, -9.54955613980731, -3.3420756727837184, 0.21598700219117006, -2.4870374344994226, -4.94371384970266,
    -6.252802209298462, -8.559341390688866, -9.05216459076474, -4.790488437172163, -17.432590135110726, -3.4264413229286874,
    -3.9352263328147066, -3.7503606021030134, -10.229455640053152, -1.7379728126641263, -9.586852336988153, -1.2549100202707066,
    -7.389824143289645, -9.768946371555728, -14.854900038047571, -3.8174646778894603, -4.6863128399619, -8.949288538819268,
    -8.739535646681146, -4.895641422933922, -14.371668397752412, -8.33687294999181, 0.3195437022571719, -11.966188014668878,
    -3.3939214754302647, 2.0360699271802067, -6.335529433840376, -5.6570603347895085, -4.408983101117856, 1.1240528691475475,
    -4.182421145163313, -2.965538020143493, -6.033721629347459, -15.23967278623413, -8.593619334069789, -5.701207003686528,
    -3.05537430449523, -8.753603794962089, -4.385125538956479, -7.042653468954864, -3.3259360091669294, -2.8906732101606782,
    -8.122460314155425, -4.774616166670806, -6.781202376306309, -5.879311711879027, 1.9823343353820446, -3.328227528136115,
    -4.180145291932982, -8.045927838436334, -12.425270356780596, -6.3638494764735745, -3.747432136026485, -1.7569400683753331,
    -19.98079927524374, -8.468535063438392, -5.8570077688108775, -3.19564901595517, -6.193614098847145, -3.236779763225751,
    -4.7715629408952855, -5.493836035724953, -2.991788464486631, 2.872195311901006, -9.05022716471681, -8.694973907998966,
    -19.66408642893979, -5.464332468953171, -5.269569994637704, -10.525676235423347, -5.0382404404355725, -2.7394434033698274,
    -2.0987275239948797, -13.120743003885382, -7.360695501779151, -10.080311748980353, -8.727425983849795, 0.7989232261788572,
    -7.661296170664047, -0.9031038877749751, -10.330711902738583, -8.85392007180594, -1.425167199991332, -0.6595179787464449,
    -4.896446463414519, -26.69051833676879, -1.1451593369584976, -8.730452969187812, 6.969248617602396, -4.928893425203699,
    0.01937389213122742, -2.617224598337203, -4.637980055362775, -6.841521012542748, -3.1012923079543357, -6.973676484944129,
    6.662431498218989, -2.068651332058777, -1.8612539041759448, -4.273663259093915, -0.3376788931957302, -3.12217969222236,
    -4.034106513985308, -4.141300533635802, -6.548266898050538, -18.461820291943773, -6.448518665123516, 0.03741023078796779,
    -8.36079447868433, -14.720195481597472, -11.904229694263003, -6.135852908757375, -42.65012440859508, -1.2678722833367662,
    -4.491453384164274, -3.6249745183721, -10.35976505756263, -10.152497641845091, -16.249374245091666, -8.37687064339008,
    -5.9357854063116955, -9.526924495635441, -4.125002829901705, -2.769652016126525, -3.5888591380326655, -6.913717493450685,
    -7.698047255360638, -8.161933467679756, -1.5663457223202153, 3.0192912731428514, -4.017041410370872, -4.950793362071496,
    -7.560596145267805, -6.933015236533441, -6.186249325352945, -5.323762654254989, -6.658029355562957, -5.564648440919892,
    -3.393562598033572, -5.1674571227448824, -4.743734727528264, -11.087790478597018, -4.241601355443132, 1.5421580763089269,
    -5.281320355927675, -6.1998241482304515, -33.567070077609785, -6.548281673813705, -4.031569180378254, 1.9714031562198162,
];
