// 50 sorted draws of N(0.3, 1.1), frozen test fixture.
const KS_SAMPLE: [f64; 50] = [
    -2.555583480015366, -2.312693212830949, -2.0912034380627396, -2.0774054560980106, -1.7178855319715247, -1.5508392828630482,
    -1.487101527974772, -1.469705055346737, -1.2676968389318621, -1.22573207861622, -1.038720586595287, -0.7188189189390624,
    -0.6977677864890239, -0.6381862862295458, -0.5830984912082355, -0.5607465389495123, -0.29627945384082593, -0.23685663027632692,
    -0.22406600089526157, -0.20543788542739466, -0.17863524274473064, -0.13880219370842667, -0.11266772839158024, -0.11114020502011657,
    -0.10248449248049457, 0.02200537887066234, 0.05545820782359437, 0.12392090657346028, 0.13683155194172766, 0.14044852947644548,
    0.14306792335448437, 0.3216200342203387, 0.3685234171865529, 0.43609691206779405, 0.5433274605266192, 0.5880052812802812,
    0.6833679243810766, 0.7274505688011927, 0.7347938966385203, 0.8418149290438222, 0.940828539961045, 0.9442736715352418,
    1.1073401551719777, 1.1396563632153738, 1.2061473771920488, 1.3296704227943883, 1.3508151435234899, 1.497955935903429,
    2.119865456960621, 2.246491328123427,
];
