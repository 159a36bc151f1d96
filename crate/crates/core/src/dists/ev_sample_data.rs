// 400 draws of Gumbel-min(location 43, scale 3.4), frozen test fixture.
const EV_SAMPLE: [f64; 400] = [
    40.2381584255993, 44.88040416273598, 46.988636220907445, 35.82080960231571, 41.422878698733285, 44.07583131124376,
    40.587394998830476, 44.7373717673986, 45.004981996332816, 44.61592850807751, 35.02712984735932, 47.00018536088139,
    43.93493680239603, 36.487279099500576, 44.15650796257131, 47.21083592009393, 43.50215829455005, 42.747912267698744,
    34.8016059083474, 38.63052126428732, 43.776839543039394, 46.99603851513774, 37.64665707094411, 44.73665366350711,
    43.66866142588201, 31.62289061465048, 50.032685554113066, 43.08107722353608, 39.07622482957194, 41.24642060931954,
    47.69355838812769, 42.02023328409215, 43.41501775872281, 47.45218775319709, 46.647576225164634, 46.69185629570422,
    41.358442214342325, 40.07114423221778, 41.78661926405038, 28.58275283742079, 44.51151158052101, 41.5669693993629,
    42.24327359705166, 45.71468462631598, 34.15811555869668, 46.49601724106554, 38.93598945198598, 42.33374886410171,
    47.98164439533463, 42.35967881952222, 36.63819015923938, 45.338154747711116, 44.261292202966104, 43.65103047302342,
    45.81271058555318, 43.61559969871074, 39.599851017895425, 35.5739744907855, 46.65389359526141, 41.39741954059758,
    41.81902248041155, 43.82994077884435, 42.11482503754883, 35.927266825016176, 43.992627891094074, 37.49463345317316,
    37.54708108671335, 42.98884730139499, 41.53398513388673, 44.77741261215763, 45.9285565646916, 41.846345413928454,
    42.13315382908932, 44.74200913284906, 41.94379252314977, 41.74246734925987, 46.72303840280471, 37.15153602834337,
    43.11455868631226, 43.04213158709128, 39.59146279540144, 42.171949043119206, 44.24904063446435, 45.141136779560085,
    43.22426561057728, 42.91206846040669, 39.13249643010965, 45.17317753531915, 38.91311876979499, 40.26229450214743,
    35.51626067522708, 33.69420925851242, 42.62084796488778, 38.202558093132566, 48.070578842426094, 42.40195957628772,
    42.56101803153697, 37.77000779303648, 42.27565131779667, 47.66806832718883, 37.901968010371306, 43.994320506182554,
    45.487185078579984, 42.609808088240605, 39.81838288694558, 44.09327754013036, 44.24240329904513, 24.72740696448658,
    44.14551668341659, 44.10267841513709, 42.496331266275945, 42.53378402155496, 46.38878768547908, 36.95565321227439,
    42.57544760473739, 38.56962849839256, 39.235861785251615, 44.48239468055286, 38.512938530970686, 44.17978737954004,
    40.821764176326994, 47.74095133856828, 43.71775409859632, 45.2141394260048, 44.13142048454725, 39.61104503421189,
    43.043082090400986, 38.83089625049958, 42.48894249497291, 45.16374117940644, 37.00052293442944, 45.81126099239094,
    40.836011249656536, 47.92774109513619, 38.763958934655356, 41.67556636866252, 42.152135969977884, 41.94487685732285,
    37.665438614555924, 40.48167238641449, 42.30443078490408, 43.75984643293896, 42.84244343759383, 42.82208621178058,
    47.03441235977812, 37.851330574919274, 38.642036855558224, 37.980985089907804, 40.12840117074454, 40.627935827492976,
    46.34535421689036, 46.38225087687023, 40.9178316578238, 40.515412406299475, 35.10728490879157, 44.298896235746454,
    43.66516340488348, 41.813406903294585, 44.167544026818625, 36.197945965676624, 45.11859659270546, 40.40489426203467,
    34.172980328700895, 44.080779923134166, 32.98050092763614, 43.888727359630494, 30.379529452767468, 41.800446709683136,
    44.66547387374217, 35.08860867788049, 41.282959509608055, 25.929519042035583, 43.331049799867124, 39.88512379047366,
    42.061763130697905, 47.07385929170321, 43.67126292655262, 44.30507489104331, 41.27024820889401, 38.3597341190041,
    38.75383034657229, 43.97608346968517, 43.242831307408856, 45.86104540157462, 40.92974942630367, 37.122929564347785,
    40.951171503033876, 47.73305245632314, 41.457813235853166, 45.629990431435935, 42.26140491254061, 38.308155381111234,
    42.85487006607783, 34.16785068468976, 32.123311629864716, 32.16902248325064, 44.02754253144113, 36.51746255446242,
    40.535610420061474, 44.96938569842381, 40.033235493118276, 47.656365395801494, 34.91214516037589, 25.94106808250747,
    36.655950779540724, 39.92063706571918, 40.485780988678684, 34.02677429783826, 37.104195076202565, 48.11138958770918,
    40.50223385395735, 33.74999838785464, 41.51037047411801, 45.096055186930805, 41.19374596764814, 37.80052633193583,
    44.38470870331247, 38.43955335616362, 41.93173142348701, 45.38568289209144, 39.571759830012454, 42.309782500477276,
    41.12871990910287, 45.625333527513156, 41.105354190160185, 32.150410255080494, 45.93840255977867, 44.44779516605529,
    41.97669161263807, 45.30335606222376, 40.637634611428886, 35.538102641910875, 36.52410498396785, 38.3815408066949,
    43.151395292017675, 45.37559240923757, 44.367277510239475, 38.666331015589, 47.3228916485421, 35.76462769012329,
    39.109523393050864, 41.525074240246525, 41.59384852643967, 43.69849462655656, 34.105827487640255, 27.020293741590173,
    41.24995386653595, 42.329622896977476, 46.92114846525986, 42.7641568848122, 30.224882783244333, 39.62434617694773,
    45.30422196791825, 40.59392801669065, 47.368342472950815, 40.2812282282328, 42.993338024961055, 37.1162655788604,
    34.46625599329993, 41.50927571385984, 31.111933827496763, 46.54219095295466, 27.42913491252184, 43.98864137951165,
    41.51783737138829, 31.123916804220606, 46.06301194446393, 45.88824958485732, 36.36064129334699, 40.5572927288896,
    34.011020064281524, 42.80827130172611, 36.086164216987626, 44.03722748506885, 45.10128695030625, 42.57847682327053,
    37.61003774378345, 44.8875943179095, 29.286167473091176, 46.606165267272125, 31.651726042718327, 45.832203016136745,
    43.49227340636844, 40.68630833200824, 41.10267800201904, 37.073564311291676, 33.59411020106159, 40.94903658726444,
    35.71684671765864, 39.00520760782268, 43.341851250883245, 35.745751804209526, 36.00034464468011, 31.290025831711596,
    42.062038057609975, 39.68316950381537, 37.51889770435552, 41.5152084902363, 43.4763062807182, 33.390798419344776,
    43.168399230510815, 48.023521456951805, 40.13990381918097, 41.32205449310865, 36.1486514036535, 43.87356934503566,
    44.84789908066846, 43.04864355955975, 41.381752476469195, 44.15712028698714, 46.634469307255614, 43.705011903269366,
    41.84132919565958, 48.278185337307484, 46.079827731117874, 43.901834547214854, 47.60338723309174, 43.02487383578766,
    45.0444449248627, 37.45135728420424, 43.444150507751, 40.73233920052084, 45.70154389408806, 48.32922863081337,
    44.576221291016054, 40.89136614679811, 41.180648169498994, 41.49907880784441, 36.623899313934274, 45.82893092286005,
    33.61119712644771, 33.009977119983866, 36.589271691306166, 37.02412144776564, 43.671056832809995, 45.35028777889458,
    38.81002082181192, 45.129004422563064, 36.67655603237458, 43.879344532155336, 42.88122423625848, 44.65760356371784,
    30.995146300035692, 40.88011968762883, 48.705317704949664, 35.82731134726805, 45.950201011822074, 44.82352778710937,
    38.947962858404104, 29.92291259538316, 38.02850795947926, 38.16193957358568, 40.80762921248787, 39.77134551913284,
    36.3563402755323, 41.605761332744336, 48.77511897470401, 39.26356924906189, 38.85589479147437, 41.67428020217089,
    31.194161562130503, 41.76806482009413, 37.72940271599755, 42.0475036965324, 39.95843198640008, 42.599431301948435,
    27.492085752724194, 39.76330951061509, 42.58608312079568, 31.619876736397288, 40.12941450180574, 39.933315407470076,
    42.66057722321455, 43.89775686493177, 41.32097440719653, 44.07926240546423, 35.930817504904454, 47.00550896001896,
    41.89964476828658, 19.6247206555997, 40.09442778150609, 39.0218862777322, 43.19722362166339, 43.75285901576096,
    40.196532998494035, 41.99585370145171, 40.658651676730756, 41.42206477114961, 41.54207357181448, 39.09932440860177,
    44.86936346668796, 42.08144059105561, 42.694215083632095, 37.270046597333206, 39.373555340581404, 45.274179465106855,
    33.64231447524602, 38.45529342496049, 28.557331966728505, 44.312257935071926,
];
