// Generated tables. Expression syntax: integers, `v`, `cK` = cos(K*v/2), `sK` = sin(K*v/2),
// binary + - * /, unary minus, integer powers `^`, parentheses.

/// Denominator shared by b_1..b_7 of each phase-fitted method, indexed by derivative count.
pub(crate) const DENOM: [&str; 7] = [
    "(-4096)*v^2*s1^12",
    "(-4194304)*v^4*c1*s1^21",
    "2147483648*v^6*c1^3*s1^27",
    "824633720832*v^8*c1^6*s1^30",
    "-316659348799488*v^10*c1^10*s1^30",
    "(-151996487423754240)*v^12*c1^15*s1^27",
    "52183852646400*v^14*s2^21",
];

/// Numerators of b_1..b_7. `None` marks components rebuilt from the defining conditions.
pub(crate) const NUMER: [[Option<&str>; 7]; 7] = [
    [
        Some("(18392342566*c2-11352051608*c4+4958070583*c6-1405810666*c8+234300323*c10)*v^2/7257600\
        -5373508799*v^2/3628800-2*c8+4*c10-4*c12+2*c14"),
        Some("(-(35142254976*c2-20245959411*c4+7950775936*c6-1405906674*c8+234300323*c12)*v^2)/7257600\
        +138116413*v^2/48384+24*c8-48*c10+48*c12-24*c14"),
        Some("(50246280942*c2-26679563229*c4+8977155979*c6-702953337*c10+702905333*c12)*v^2/3628800\
        -415407179*v^2/50400-132*c8+264*c10-264*c12+132*c14"),
        Some("(-(119523462784*c2-43206415175*c4+17954311958*c8-7950775936*c10+4958070583*c12)*v^2)/7257600\
        +36857631107*v^2/3628800+440*c8-880*c10+880*c12-440*c14"),
        Some("(113384696634*c2-43206415175*c6+53359126458*c8-20245959411*c10+11352051608*c12)*v^2/7257600\
        -12520978019*v^2/1209600-990*c8+1980*c10-1980*c12+990*c14"),
        Some("(-(56692348317*c4-59761731392*c6+50246280942*c8-17571127488*c10+9196171283*c12)*v^2)/3628800\
        +1197972677*v^2/604800+1584*c8-3168*c10+3168*c12-1584*c14"),
        Some("v^2*((-7187836062)*c2+37562934057*c4-36857631107*c6+29909316888*c8-10358730975*c10\
        +5373508799*c12)/1814400-1848*(c8-2*c10+2*c12-c14)"),
    ],
    [
        Some("4*v*s1^9*(29030400*(2*c2+2*c4+2*c6+2*c8+2*c12+1)*s1^3+v*(3628800*(9*c7-19*c9+2*(11*c11\
        -7*c13+c15))-11*v^2*(65542714*c1-133977068*c3+127463860*c5-62185337*c7+21299831*c9)))/14175"),
        Some("8*v*s1^9*(v*(11*v^2*(57295722*c1-50530458*c3+72737235*c5+6776053*c7+1285617*c9+21299831*c11)\
        -1814400*(10*c5+68*c7-156*c9+187*c11-119*c13+9*c15+c17))-29030400*(12*c2+12*c4+12*c6\
        +11*c8+2*c10+10*c12+c14+6)*s1^3)/14175"),
        Some("4*v*s1^9*(58060800*(66*c2+66*c4+66*c6+56*c8+20*c10+46*c12+10*c14+33)*s1^3+v*(7257600*(50*c5\
        +97*c7-267*c9+341*c11-217*c13-9*c15+5*c17)-11*v^2*(418185576*c1-101897295*c3+429149785*c5\
        +213355284*c7+25712340*c9+21299831*(9*c11+c13))))/14175"),
        Some("8*v*s1^9*(v*(11*v^2*(469639178*c1+311586932*c3+333470325*c5+480049389*c7+77311321*c9\
        +260311901*c11+63470954*c13)-9072000*(90*c5+36*c7-188*c9+275*c11-175*c13-47*c15+9*c17))\
        -145152000*(44*c2+44*c4+44*c6+35*c8+18*c10+26*c12+9*c14+22)*s1^3)/14175"),
        Some("4*v*s1^9*(435456000*(66*c2+66*c4+66*c6+50*c8+32*c10+34*c12+16*c14+33)*s1^3+v*(54432000*(80*c5\
        -23*c7-51*c9+110*c11-70*c13-54*c15+8*c17)-11*v^2*(2105070006*c1+1324106064*c3+1778508400*c5\
        +1717441153*c7+754192017*c9+920962652*c11+380999708*c13)))/14175"),
        Some("16*v*s1^9*(v*(11*v^2*(809642310*c1+579296403*c3+714780380*c5+616166543*c7+386753499*c9\
        +310811926*c11+175060939*c13)-5443200*(350*c5-212*c7+12*c9+209*c11-133*c13-261*c15\
        +35*c17))-87091200*(132*c2+132*c4+132*c6+97*c8+70*c10+62*c12+35*c14+66)*s1^3)/14175"),
        Some("(-8*v*s1^9*(v*(11*v^2*(1943141544*c1+1212190059*c3+1835374595*c5+1290288356*c7+1000981284*c9\
        +673851637*c11+426700525*c13)-152409600*(30*c5-21*c7+7*c9+11*c11-7*c13-23*c15+3*c17))\
        +304819200*(3*s5-4*s7+2*s11-4*s15+3*s17)))/14175"),
    ],
    [
        Some("2048/945*v^2*s1^15*(8*v^2*(11*((-4002729)*c2+2078430*c4-724279*c6+2346178)*v^2+725760*((\
        -62)*c2+59*c4-40*c6+26*c8-8*c10+c12+35)*s1^2)*c1^3+483840*s1^3*(v*(30*c2+30*c4+30*c6\
        +13*c8+18*c10+12*c12-5*c14)+3*(5*v+s8+s14)))"),
        Some("2048/315*v^2*s1^15*((-8)*v^2*((-9314063)*v^2+572*(22949*v^2-120960)*c2+44*(1391040\
        -428431*v^2)*c4+(9699668*v^2-46287360)*c6+(27699840-7967069*v^2)*c8-10644480*c10\
        +1108800*c12+241920*c14-60480*c16+35925120)*c1^3-322560*s1^3*(2*v*(90*c2+90*c4+81*c6\
        +50*c8+49*c10+30*c12-4*c14-2*c16)+3*(30*v+s6+4*s8+s10+s12+4*s14+s16)))"),
        Some("4096/315*v^2*s1^15*(10080*(8*v*(1980*c2+1961*c4+1680*c6+1226*c8+1015*c10+591*c12\
        +50*c14-52*c16-3*c18+990)*s1^3-39*c3+3*(13*c5+32*c7-46*c9+46*c13-32*c15-13*c17+13*c19\
        +c21))-c1*((11*(6333473*c4+4157054*c6+3619356*c8+2960054*c10+724279*c12)*v^2+4*(17018353*v^2\
        +438480)*c2+20160*((-652)*c4+445*c6-118*c8-675*c10+939*c12+129*c14-104*c16+14*c18\
        +c20))*v^2+12*(2409451*v^4-110880*v^2+2520)))"),
        Some("2048/945*v^2*s1^15*(3*(432759107*v^4-7257600*v^2+483840)*c1+362880*(17*c3-31*c5-16*c7\
        +37*c9-37*c13+16*c15+31*c17-17*c19-4*c21)+v*(v*(11*(103979586*c5+82091598*c7+62181040*c9\
        +36275904*c11+724279*(15*c13+c15))*v^2+(1298904167*v^2-104025600)*c3+60480*((-18)*c5\
        -366*c7-1325*c9+957*c11+2370*c13+718*c15-279*c17+15*c19+8*c21))-1935360*(1650*c2\
        +1612*c4+1365*c6+1066*c8+819*c10+468*c12+100*c14-34*c16-6*c18+825)*s1^3))"),
        Some("2048/315*v^2*s1^15*((-24)*(40469957*v^4-1058400*v^2+70560)*c1+60480*((-44)*c3+117*c5\
        +37*c7-109*c9+109*c13-37*c15-117*c17+44*c19+28*c21)+v*(161280*(14850*c2+14318*c4\
        +12210*c6+9699*c8+7266*c10+4152*c12+1125*c14-176*c16-84*c18+7425)*s1^3+v*((-11)*(76636238*c5\
        +62120365*c7+46335777*c9+26765870*c11+9510034*c13+1196642*c15)*v^2+14*(4348800-69382489*v^2)*c3\
        +20160*(288*c5+1506*c7+1900*c9-2112*c11-4320*c13-1913*c15+339*c17+60*c19-28*c21))))"),
        Some("2048/315*v^2*s1^15*(3*(521152357*v^4-16934400*v^2+1128960)*c1+241920*(7*c3-33*c5\
        -20*c7+41*c9-41*c13+20*c15+33*c17-7*(c19+2*c21))+v*(v*(11*(123210823*c5+99307625*c7\
        +73495191*c9+43125241*c11+15932285*c13+2736371*c15)*v^2+(1526016833*v^2-73382400)*c3\
        -40320*(774*c5+1002*c7+1333*c9-1617*c11-3258*c13-1442*c15+51*c17+105*c19-28*c21))\
        -1290240*(2970*c2+2837*c4+2445*c6+1938*c8+1446*c10+831*c12+240*c14-14*c16-21*c18\
        +1485)*s1^3))"),
        Some("(-4096/945)*v^2*s1^15*(54*(50601001*v^4-1764000*v^2+117600)*c1+1270080*(c3-9*c5-8*c7\
        +14*c9-14*c13+8*c15+9*c17-c19-5*c21)+v*(v*(11*(3*(71792647*c5+57772764*c7+42931200*c9\
        +25158645*c11+9410087*c13)+5313226*c15)*v^2+(2670318541*v^2-112190400)*c3+423360*((\
        -171)*c5-141*c7-221*c9+264*c11+540*c13+229*c15+6*c17-21*c19+5*c21))-3386880*(1980*c2\
        +1885*c4+1632*c6+1290*c8+963*c10+555*c12+162*c14-4*c16-15*c18+990)*s1^3))"),
    ],
    [
        Some("262144/5*v^3*c1*s1^18*(140734*c1*v^5+12*(5357*v^4-1680*v^2+480)*c3*v+(4*(21791*v^4\
        +6480*v^2-3600)*c5+(97229*v^4-27360*v^2+8640)*c7+(32989*v^4-7200*v^2+10800)*c9+80*((\
        -8)*v*(492*c2+492*c4+301*c6+288*c8+215*c10-86*c12-60*c14+26*c16+246)*s1^3+33*(16*v^2\
        -9)*c11+54*(3-2*v^2)*c13+30*(3-4*v^2)*c15+9*(8*v^2-13)*c17+3*(9-4*v^2)*c19))*v-61440*c1^2*(2*c2\
        +2*c4+2*c6+2*c8+2*c12+1)*s1^5)"),
        Some("(-4194304/5)*v^3*c1^3*s1^18*(84282*c1*v^5+4*(20504*v^4-4200*v^2+1125)*c3*v+(12*(4774*v^4\
        +2160*v^2-975)*c5+15*(4015*v^4-2112*v^2+552)*c7+(32989*v^4+4860*v^2+6480)*c9+60*(99*(5*v^2\
        -3)*c11+3*(63-71*v^2)*c13+(60-11*v^2)*c15+2*((-4)*v*(492*c2+492*c4+286*c6+310*c8\
        +202*c10-95*c12-38*c14+19*c16+246)*s1^3+3*(5*v^2-17)*c17-3*(v^2-4)*c19)))*v-46080*c1^2*(2*c2\
        +2*c4+2*c6+2*c8+2*c12+1)*s1^5)"),
        Some("1572864/5*v^3*c1*s1^18*((-61440)*c1^2*(22*c2+22*c4+21*c6+16*c8+13*c10+9*c12+6*c14\
        +c16+11)*s1^5+2*v*(604527*v^4-31000*v^2+6600)*c1+v*(1090199*v^4-5920*v^2-17520)*c3\
        +v*((951159*v^4-47360*v^2-7560)*c5+5*(148753*v^4-10576*v^2+3480)*c7+(444741*v^4+48080*v^2\
        -7200)*c9+120*((-132)*c11+60*c13+218*c15-36*c17-118*c19+15*c21+7*c23)+v*(11*v*(15863*v^2\
        +8960)*c11+v*(32989*v^2+37280)*c13-40*(8*(10601*c2+9368*c4+7755*c6+5858*c8+3103*c10\
        +538*c12-457*c14-154*c16+70*c18+14*c20+5412)*s1^3+v*(383*c15+103*c17+4*((-26)*c19\
        +2*c21+c23))))))"),
        Some("(-4194304/5)*v^3*c1^3*s1^18*((-15360)*c1^2*(110*c2+110*c4+108*c6+78*c8+66*c10+44*c12\
        +32*c14+2*c16+55)*s1^5+6*v*(252263*v^4-15900*v^2+3720)*c1+v*(1374791*v^4+33000*v^2\
        -30780)*c3+v*(5*(239129*v^4-18288*v^2-2052)*c5+15*(62139*v^4-4720*v^2+2040)*c7+(553817*v^4\
        +79080*v^2-12600)*c9+180*((-143)*c11+59*c13+237*c15-75*c17-104*c19+28*c21+2*c23)\
        +v*(165*v*(1243*v^2+760)*c11+v*(32989*v^2+42360)*c13-20*(8*(26818*c2+23302*c4+19472*c6\
        +14923*c8+7646*c10+934*c12-1360*c14-200*c16+194*c18+11*c20+13530)*s1^3+3*v*(426*c15\
        +5*c17-77*c19+15*c21+c23)))))"),
        Some("262144/5*v^3*c1*s1^18*((-184320)*c1^2*(330*c2+326*c4+298*c6+250*c8+188*c10+142*c12\
        +80*c14+32*c16+4*c18+165)*s1^5+480*v*(109813*v^4-4160*v^2+384)*c1+12*v*(4062663*v^4\
        -134080*v^2-19200)*c3+v*(12*(3490311*v^4-138560*v^2-16800)*c5+(32182799*v^4-992640*v^2\
        +192960)*c7+(20304031*v^4+1640640*v^2-74160)*c9+720*((-627)*c11+532*c13+788*c15-17*c17\
        -385*c19-176*c21+52*c23+12*c25)+v*(v*(32989*(17*c15+c17)*v^2+176*(54469*v^2+16860)*c11\
        +16*(192181*v^2+97440)*c13+480*(352*c15-232*c17+22*c19+68*c21-11*c23-3*c25))-1920*(77156*c2\
        +69308*c4+57403*c6+42088*c8+23663*c10+7258*c12-332*c14-962*c16-52*c18+152*c20+22*c22\
        +40106)*s1^3)))"),
        Some("(-4194304/5)*v^3*c1^3*s1^18*((-92160)*c1^2*(66*c2+66*c4+61*c6+50*c8+37*c10+29*c12\
        +16*c14+5*c16+33)*s1^5+6*v*(889361*v^4-36900*v^2+5880)*c1+v*(4932719*v^4-121800*v^2\
        -42840)*c3+v*(3*(1410343*v^4-62640*v^2-11880)*c5+48*(68101*v^4-3465*v^2+1110)*c7\
        +4*(502843*v^4+53175*v^2-2790)*c9+3*(11*(26231*v^4+10980*v^2-2520)*c11+(78023*v^4\
        +46140*v^2+19560)*c13+2*((4829*v^4-1870*v^2+13890)*c15-10*(8*v*(31262*c2+27954*c4\
        +23122*c6+17249*c8+9324*c10+2061*c12-650*c14-363*c16+74*c18+55*c20+16236)*s1^3+3*(67*v^2\
        +99)*c17+21*(32-5*v^2)*c19+(84-31*v^2)*c21+15*(v^2-6)*c23)))))"),
        Some("524288/5*v^3*c1*s1^18*((-122880)*c1^2*(462*c2+452*c4+417*c6+344*c8+271*c10+191*c12\
        +118*c14+45*c16+10*c18+231)*s1^5+2*v*(24403159*v^4-927600*v^2+75600)*c1+2*v*(22599203*v^4\
        -730560*v^2-111600)*c3+v*(6*(6473137*v^4-267360*v^2-17880)*c5+2*(14893043*v^4-320160*v^2\
        +65880)*c7+6*(3171377*v^4+240960*v^2-28320)*c9+720*((-264)*c11+302*c13+664*c15+50*c17\
        -348*c19-127*c21+5*c23+20*c25)+v*(v*(66*(142321*v^2+36320)*c11+2*(1641761*v^2+744960)*c13\
        +(729971*v^2+262800)*c15+(84227*v^2-61680)*c17+480*(24*c19+32*c21+5*c23-5*c25))-640*(214989*c2\
        +192536*c4+159857*c6+116994*c8+66367*c10+23162*c12+1179*c14-2150*c16-278*c18+270*c20\
        +110*c22+111232)*s1^3)))"),
    ],
    [
        Some("100663296*v^4*c1^3*s1^18*((11858*v^6-1512*v^4+1005*v^2-60)*c1+9*(1540*v^6+280*v^4\
        -271*v^2+20)*c3+60*(-c5-6*c7+8*c9-8*c13+6*c15+c17-3*c19+c21)+v*((-3072)*c1^2*(18*c2\
        +18*c4+18*c6+3*c8+14*c10+4*c12-7*c14+9)*s1^5-16*v^2*(2244*c2+1419*c4+1480*c6+914*c8\
        -961*c10-535*c12+428*c14+104*c16-77*c18+1122)*s1^3+v*(11044*v^4-3816*v^2+1401)*c5\
        +v*((4675*v^4+180*v^2+2358)*c7+(803*v^4+5028*v^2-5376)*c9+3*(44*(18-13*v^2)*c11+4*(283\
        -155*v^2)*c13+2*(212*v^2-525)*c15+(40*v^2-71)*c17+(285-92*v^2)*c19+(20*v^2-71)*c21))))"),
        Some("(-100663296)*v^4*c1^3*s1^18*(2*(77077*v^6-672*v^4-1074*v^2+120)*c1+6*(23705*v^6-1920*v^4\
        -22*v^2+40)*c3-240*(4*c5-c7-2*c9+2*c13+c15-4*c17+c19+2*c21-c23)+v*((-6144)*c1^2*(108*c2\
        +108*c4+77*c6+70*c8+43*c10+21*c12-6*c14-13*c16+54)*s1^5-32*v^2*(11668*c2+10196*c4\
        +7776*c6+2663*c8-1296*c10-1641*c12+164*c14+661*c16+12*c18-107*c20+6732)*s1^3+v*(113707*v^4\
        -6972*v^2+7080)*c5+v*(67925*v^4+10140*v^2-8412)*c7+v*(3*(8283*v^4+4572*v^2-1120)*c9\
        +11*(365*v^4-12*v^2+432)*c11+12*((742-505*v^2)*c13+(57*v^2-124)*c15+(185*v^2-689)*c17\
        +(143-41*v^2)*c19+2*(86-15*v^2)*c21+(10*v^2-59)*c23))))"),
        Some("201326592*v^4*c1^3*s1^18*((411884*v^6-10092*v^4-5115*v^2+660)*c1+3*(126445*v^6-7800*v^4\
        +1598*v^2-80)*c3+60*((-14)*c5-c7+13*c9-13*c13+c15+14*c17+c19-10*c21-c23+3*c25)+v*((\
        -3072)*c1^2*(594*c2+546*c4+458*c6+355*c8+244*c10+108*c12-3*c14-40*c16-18*c18+297)*s1^5\
        +2*v*(148951*v^4-3768*v^2+1086)*c5+v*(186340*v^4+20100*v^2-8697)*c7+v*(33*(2648*v^4\
        +636*v^2-187)*c9+132*(205*v^4+29*v^2+81)*c11+11*(365*v^4-450*v^2+1191)*c13-3*(731*c15\
        +3298*c17+593*c19-1028*c21-149*c23+147*c25)-2*v*(8*(64294*c2+54653*c4+38493*c6+15944*c8\
        -1305*c10-4899*c12-676*c14+1690*c16+633*c18-230*c20-117*c22+34074)*s1^3+3*v*(171*c15\
        -365*c17-73*c19+10*(9*c21+c23-c25))))))"),
        Some("(-100663296)*v^4*c1^3*s1^18*(4*(674575*v^6-23478*v^4-4140*v^2+720)*c1+4*(610445*v^6\
        -25050*v^4+2328*v^2-240)*c3+240*((-12)*c5-9*c7+19*c9-19*c13+9*c15+11*c17+c19-7*c21\
        -5*c23+3*c25+c27)+v*((-6144)*c1^2*(1947*c2+1780*c4+1532*c6+1153*c8+812*c10+376*c12\
        +35*c14-80*c16-64*c18-11*c20+990)*s1^5+v*(1934185*v^4-35376*v^2-1440)*c5+v*(1264615*v^4\
        +92640*v^2-22932)*c7+v*((642895*v^4+114648*v^2-39588)*c9+11*(21955*v^4+2712*v^2+5508)*c11\
        +2*((-16)*v*(210376*c2+176605*c4+122822*c6+57558*c8+5448*c10-9243*c12-2316*c14+2721*c16\
        +1892*c18-50*c20-362*c22-61*c24+109790)*s1^3+(30745*v^4-5910*v^2+33852)*c13+(4015*v^4\
        -1242*v^2-8928)*c15+6*(5*(87*v^2-608)*c17+(261*v^2-1220)*c19+5*(130-17*v^2)*c21+(499\
        -75*v^2)*c23+3*(5*v^2-39)*c25+(5*v^2-41)*c27)))))"),
        Some("100663296*v^4*c1^3*s1^18*(5*(1193060*v^6-41904*v^4-5997*v^2+1020)*c1+60*((-14)*c3\
        -126*c5+3*c7+68*c9-68*c13-4*c15+113*c17+9*c19-63*c21-22*c23+5*c25+13*c27+c29)+v*((\
        -3072)*c1^2*(8642*c2+8000*c4+6715*c6+5297*c8+3528*c10+1774*c12+335*c14-291*c16-234*c18\
        -84*c20-5*c22+4438)*s1^5+6*v*(900240*v^4-34950*v^2+1097)*c3+2*v*(2142800*v^4-21390*v^2\
        +4761)*c5+v*((2856205*v^4+170220*v^2-81459)*c7+3*(511335*v^4+68340*v^2-6064)*c9+44*(14405*v^4\
        +1962*v^2+2133)*c11+3*(37216*c13-1456*c15-26299*c17-9051*c19+3561*c21+2870*c23+257*c25\
        -503*c27-35*c29)+v*(v*(20*(9515*v^2-318)*c13+9*(4235*v^2-684)*c15+5*(803*v^2+2052)*c17\
        +12*(404*c19-84*c21-100*c23-12*c25+15*c27+c29))-16*(923815*c2+780435*c4+544332*c6\
        +265090*c8+54870*c10-23058*c12-10352*c14+8726*c16+6750*c18+651*c20-1000*c22-444*c24\
        -25*c26+488520)*s1^3))))"),
        Some("(-100663296)*v^4*c1^3*s1^18*(4*(2363372*v^6-84162*v^4-11175*v^2+1860)*c1+24*(355960*v^6\
        -12795*v^4+476*v^2-80)*c3+240*((-39)*c5-3*c7+23*c9-23*c13+2*c15+35*c17+6*c19-21*c21\
        -10*c23+2*c25+4*c27+c29)+v*((-6144)*c1^2*(6889*c2+6340*c4+5369*c6+4201*c8+2829*c10\
        +1439*c12+331*c14-177*c16-180*c18-69*c20-10*c22+3530)*s1^5+4*v*(1700006*v^4-14241*v^2\
        -1503)*c5+4*v*(1147190*v^4+60825*v^2-25641)*c7+v*(12*(210419*v^4+24831*v^2-1957)*c9\
        +44*(24817*v^4+3201*v^2+3159)*c11+(356345*v^4+7080*v^2+156144)*c13-12*(262*c15+8737*c17\
        +3825*c19-2*(498*c21+523*c23+67*(c25-c27))+35*c29)+v*(v*((82599*v^2-6408)*c15+15*(803*v^2\
        +864)*c17+(803*v^2+7584)*c19-12*(81*c21+135*c23+23*c25-15*c27-4*c29))-32*(731642*c2\
        +616515*c4+431394*c6+217139*c8+54930*c10-9918*c12-7072*c14+5350*c16+4914*c18+747*c20\
        -614*c22-339*c24-50*c26+386010)*s1^3))))"),
        Some("201326592*v^4*c1^3*s1^18*(44*(14828*v^4+1779*v^2+1971)*c11*v^2+48*(491*v^2+42)*s1*v\
        +2*(2652-18397*v^2)*s3*v-2*(46961*v^2+1572)*s5*v-2*(84467*v^2+996)*s7*v+92*(132-1315*v^2)*s9*v\
        +12*(6461*v^2-1752)*s11*v+12*(10789*v^2-2244)*s13*v+16*(2921*v^2+987)*s15*v+112*(219\
        -122*v^2)*s17*v+16*(570-1019*v^2)*s19*v+8*(233*v^2-1146)*s21*v+4*(1075*v^2-2004)*s23*v\
        +10*(25*v^2+12)*s25*v+2*(372-131*v^2)*s27*v+30*(12-5*v^2)*s29*v+(5494852*v^6-200688*v^4\
        -24198*v^2+4200)*c1+(4966940*v^6-164820*v^4+6873*v^2-1500)*c3+(3957316*v^6-37644*v^4\
        -15639*v^2-3900)*c5+(2678500*v^6+135480*v^4-37413*v^2-2340)*c7+2*(742786*v^6+87156*v^4\
        -15261*v^2+2220)*c9+(217855*v^6+7320*v^4+91506*v^2-4440)*c13+4*(13079*v^6-318*v^4\
        -2646*v^2+540)*c15+2*(4180*v^6+2820*v^4-25347*v^2+1740)*c17+(737*v^6+4776*v^4-28968*v^2\
        +960)*c19-6*(54*v^4-863*v^2+380)*c21-24*(45*v^4-347*v^2+80)*c23+9*((-8)*v^4+35*v^2\
        +60)*c25+3*(20*v^4-197*v^2+140)*c27+9*(4*v^4-35*v^2+20)*c29)"),
    ],
    [
        Some("(-7247757312)*v^5*c1^6*s1^15*((-122880)*c1^4*(2*c2+2*c4+2*c6+2*c8+2*c12+1)*s1^7+70*v*(396*v^6\
        +72*v^4-95*v^2+20)*c1+30*v*(616*v^6-504*v^4+335*v^2-20)*c3+v*(60*(3*v^2*(44*v^4+52*v^2\
        +35)-80)*c5+30*(66*v^6+408*v^4-979*v^2+220)*c7+100*(6*c9-88*c11+60*c13+33*c15-51*c17\
        +6*c19+12*c21-4*c23)+v*((-2560)*c1^2*(84*c2+84*c4-13*c6+84*c8+c10-115*c12+31*c16\
        +42)*s1^5-16*v^2*(641*c2+2520*c4-93*c6-5564*c8+13*c10+3882*c12-c14-1292*c16+174*c20\
        +1260)*s1^3+5*v*((44*v^4-2808*v^2+3966)*c9+88*(44-9*v^2)*c11+24*(73*v^2-212)*c13\
        -3*(24*v^2+121)*c15+3*(735-184*v^2)*c17+6*(20*v^2-71)*c19+12*(6*v^2-29)*c21+4*(29\
        -6*v^2)*c23))))"),
        Some("2415919104*v^5*c1^6*s1^15*((-737280)*c1^4*(12*c2+12*c4+12*c6+7*c8+10*c10+2*c12+5*c14\
        +6)*s1^7+180*v*(4620*v^6-672*v^4+13*v^2+120)*c1+45*v*(14256*v^6+2344*v^4+1987*v^2\
        -1300)*c3+v*(45*(8184*v^6+1608*v^4-6581*v^2+1420)*c5+45*(3256*v^6-588*v^4+4583*v^2\
        -420)*c7-300*(123*c9-154*c11+130*c13-96*c15-84*c17+171*c19-33*c21-49*c23+19*c25)\
        +v*((-7680)*c1^2*(1008*c2+497*c4+814*c6+140*c8-191*c10-231*c12-364*c14+62*c16+137*c18\
        +504)*s1^5-16*v^2*(79446*c2+26700*c4-54673*c6-35424*c8-6282*c10+23632*c12+23514*c14\
        -7782*c16-11000*c18+1044*c20+1755*c22+14510)*s1^3+15*v*(3*(792*v^4-652*v^2+1075)*c9\
        +22*(12*v^4-102*v^2-47)*c11+2*(582*v^2+1891)*c13+32*(73*v^2-342)*c15+24*(43-36*v^2)*c17\
        +3*(2131-300*v^2)*c19+(364*v^2-1887)*c21+(132*v^2-1151)*c23+(461-60*v^2)*c25))))"),
        Some("(-4831838208)*v^5*c1^6*s1^15*((-368640)*c1^4*(66*c2+66*c4+56*c6+56*c8+30*c10+36*c12\
        +10*c14+10*c16+33)*s1^7+120*v*(17424*v^6-765*v^4+716*v^2-155)*c1+45*v*(37026*v^6\
        +92*v^4-5159*v^2+1100)*c3+v*(15*(70422*v^6+10188*v^4+9929*v^2-4220)*c5+300*(161*c7\
        +33*c9-319*c11+275*c13+81*c15-123*c17+20*c19-72*c21+35*(c23+c25)-18*c27)+v*((-7680)*c1^2*(2233*c2\
        +2261*c4+1114*c6+831*c8-199*c10-879*c12-369*c14-102*c16+137*c18+121*c20+1386)*s1^5\
        -16*v^2*(106239*c2+46080*c4-45422*c6-97266*c8-7053*c10+48138*c12+23511*c14-2538*c16\
        -10990*c18-5154*c20+1755*c22+1270*c24+93890)*s1^3+15*v*((36*v^2*(968*v^2+57)-15475)*c7\
        +(12672*v^4-8132*v^2+20199)*c9+11*(270*v^4-138*v^2+1105)*c11+(330*v^4+3138*v^2-18373)*c13\
        +3*(284*v^2-921)*c15+3*(453-68*v^2)*c17+2*(1081-267*v^2)*c19+6*(408-41*v^2)*c21+(228*v^2\
        -1609)*c23+5*(12*v^2-131)*c25+4*(93-10*v^2)*c27))))"),
        None,
        None,
        Some("2415919104*v^5*c1^6*s1^15*((-737280)*c1^4*(782*c2+756*c4+681*c6+596*c8+446*c10+346*c12\
        +196*c14+111*c16+36*c18+10*c20+c22+395)*s1^7+30*v*(1475232*v^6-29700*v^4+2389*v^2\
        -2620)*c1+15*v*(2477376*v^6+16060*v^4-104631*v^2+10740)*c3+v*(45*(578688*v^6+24420*v^4\
        -2109*v^2-3460)*c5+90*(168256*v^6+2904*v^4-93*v^2+1500)*c7-300*(366*c9+1240*c11-1456*c13\
        -1008*c15+376*c17+568*c19+624*c21-226*c23-306*c25-15*c27+17*c29+23*c31+3*c33)+v*((\
        -7680)*c1^2*(53563*c2+45974*c4+30514*c6+15658*c8-559*c10-9759*c12-7958*c14-3102*c16\
        +869*c18+1533*c20+666*c22+190*c24+17*c26+29210)*s1^5-16*v^2*(2248539*c2+884628*c4\
        -465296*c6-896802*c8-222138*c10+364588*c12+334950*c14+63936*c16-93282*c18-73236*c20\
        -9234*c22+9682*c24+5604*c26+1620*c28+137*c30+1505344)*s1^3+30*v*(88*(2754*v^2-269)*v^2\
        +86133)*c9+15*v*(16*(11814*v^4-1449*v^2+5183)*c11+8*(7227*v^4+1638*v^2-13363)*c13\
        +8*(1683*v^4+1715*v^2-9429)*c15+8*(297*v^4+315*v^2-1181)*c17+8*(33*v^4-585*v^2+4033)*c19\
        +8*(2988-365*v^2)*c21+10*(72*v^2-611)*c23+18*(40*v^2-379)*c25+(76*v^2-681)*c27+(343\
        -36*v^2)*c29+(385-36*v^2)*c31+(45-4*v^2)*c33))))"),
        Some("(-4831838208)*v^5*c1^6*s1^15*((-737280)*c1^4*(457*c2+436*c4+406*c6+331*c8+281*c10\
        +181*c12+131*c14+56*c16+26*c18+5*c20+c22+230)*s1^7+30*v*((3960*v^2*(216*v^2-5)-8761)*v^2\
        +1780)*c1+15*v*(1435984*v^6+22000*v^4-3297*v^2-10980)*c3+v*(45*(337392*v^6+11440*v^4\
        -27653*v^2+4460)*c5-300*(219*c7+603*c9-300*c11+28*c13-756*c15-148*c17+776*c19+96*c21\
        -83*c23-115*c25-63*c27+31*c29+7*c31+3*c33)+v*((-7680)*c1^2*(32205*c2+25293*c4+19114*c6\
        +8361*c8-241*c10-4841*c12-5127*c14-1558*c16+452*c18+766*c20+452*c22+95*c24+17*c26\
        +16488)*s1^5+45*v*(1408*(141*v^4+v^2)+24571)*c7+15*v*(352*(820*v^2-49)*v^2+65325)*c9\
        +v*((-16)*v*(1391199*c2+496638*c4-298296*c6-433962*c8-149583*c10+183078*c12+208215*c14\
        +31836*c16-54047*c18-36606*c20-7569*c22+4842*c24+3624*c26+810*c28+137*c30+794124)*s1^3\
        +90*(18975*v^4-2632*v^2+4838)*c11+30*(18117*v^4+2184*v^2-10934)*c13+15*((-2372)*c17\
        +25024*c19+6864*c21-925*c23-3401*c25-1173*c27+509*c29+125*c31+45*c33)+30*((36*(22*v^2\
        +7)*c17+9*(11*v^2-168)*c19+(11*v^2-488)*c21+48*c23+192*c25+56*c27-2*(12*c29+3*c31\
        +c33))*v^2+(4488*v^4+5348*v^2-33558)*c15)))))"),
    ],
    [
        None,
        Some("3478923509760*v^6*c1^10*s1^12*(v*(8*(41029*v^4-6060*v^2-2340)*c2+(216658*v^4-231600*v^2\
        +29520)*c4+720*(8*c6-73*c8+46*c10+20*c12-26*c14+58*c16-8*c18-53*c20+6*c22+13*c24)\
        +v*(v*(4*(47520-64489*v^2)*c6+240*(889*c8-472*c10+142*c12-427*c14-682*c16+393*c18\
        +383*c20-84*c22-71*c24)+v*(2*v*(15728640*v*(42*c4+47)*s1^9*c1^11-53557*c8-23336*c10\
        -10180*c12+62776*c14+31222*c16-28732*c18-15557*c20+4554*c22+2637*c24)-3*(4524*s2\
        +89649*s4-109162*s6-66107*s8+12508*s10-17082*s12+55388*s14+44508*s16-32396*s18-22567*s20\
        +5770*s22+3929*s24)))-2400*(48*c2-83*c4+134*c6-160*c8-76*c10-19*c12-100*c14+46*c16\
        +54*c18+24)*s2^3))-4*(28927*v^5-18240*v^3+1080*v-2520*s2+630*s4+1260*s6-1890*s8+1260*s10\
        +1260*s12-1890*s14+1260*s16+630*s18-1890*s20+630*s24))"),
        Some("(-3478923509760)*v^6*c1^10*s1^12*(4*(221284*v^5-37695*v^3-9090*v-1575*s2+5670*s4\
        +2520*s6-10080*s8+4095*s10+4095*s12-10080*s14+2520*s16+4095*s18-1575*s20+2520*s22\
        -1575*s26)+v*((-2)*(29854*v^4+91035*v^2-24390)*c2-180*(402*c4+154*c6-804*c8+973*c10\
        -115*c12-1308*c14+374*c16+251*c18+c20+326*c22-60*c24-125*c26)+v*(1200*(159*c2-968*c4\
        +1401*c6-459*c8+995*c10+1205*c12-223*c14+73*c16-44*(5*c18+6)-247*c20)*s2^3+4*v*(70204*v^2\
        +98445)*c4+v*((366842*v^2-234180)*c6+30*(9964*c8+32995*c10-25405*c12-22548*c14+4066*c16\
        +105*c18+4791*c20+4542*c22-1516*c24-1219*c26)+v*(2*v*(15728640*v*(294*c2+70*c6-1)*s1^9*c1^11\
        -517606*c8-235773*c10+227655*c12+127788*c14+14656*c16-3946*c18-39071*c20-18661*c22\
        +8590*c24+4745*c26)-3*(222705*s2-265046*s4+119729*s6-332466*s8-319876*s10+278964*s12\
        +170124*s14-3966*s16+739*s18-48110*s20-30601*s22+12050*s24+7780*s26))))))"),
        Some("17394617548800*v^6*c1^10*s1^12*(v*(8*(95239*v^4+132*v^2-6660)*c2+720*(37*c4+36*c6\
        -129*c8+92*c10+40*c12-36*c14+110*c16-30*c18-77*c20+8*c22-3*c24+4*c26+8*c28)+v*((\
        -160)*(3540*c2-4081*c4+4258*c6-6420*c8-2416*c10-1709*c12-3480*c14+1352*c16+946*c18\
        +420*c20+452*c22-122)*s2^3+22*v*(9223*v^2-12168)*c4+v*(4*(76560-94681*v^2)*c6+48*(7741*c8\
        -4350*c10+1490*c12-4837*c14-5698*c16+2835*c18+2127*c20+178*c22+205*c24-228*c26-176*c28)\
        +v*(2*v*(22020096*v*(70*c4+10*c8+63)*s1^9*c1^11-55381*c8-74360*c10-19668*c12+94024*c14\
        +43706*c16-24996*c18-14833*c20-3270*c22-1099*c24+1808*c26+984*c28)+210232*s2-456433*s4\
        +711254*s6+322575*s8-9720*s10+108420*s12-311124*s14-200610*s16+107672*s18+68535*s20\
        +11650*s22+6143*s24-8148*s26-5090*s28))))-4*(18341*v^5+1344*v^3-2520*v-3360*s2+210*s4\
        +2100*s6-3150*s8+2520*s10+2520*s12-3150*s14+2520*s16+210*s18-3150*s20+420*s22+210*s24\
        +420*s28))"),
        None,
        Some("3478923509760*v^6*c1^10*s1^12*(v*(4*(2852497*v^4+170640*v^2-207720)*c2+(2064158*v^4\
        -2922480*v^2+223920)*c4+720*(586*c6-1710*c8+1310*c10+560*c12-408*c14+1504*c16-484*c18\
        -912*c20+70*c22-178*c24+74*c26+121*c28+6*c30+11*c32)+v*(v*(8*(485010-519679*v^2)*c6\
        +240*(20686*c8-12039*c10+4270*c12-14162*c14-14606*c16+6470*c18+4182*c20+1427*c22\
        -7*((-178)*c24+93*c26+69*c28+8*c30)-41*c32)+v*(2*v*(110100480*v*(210*c4+42*c8+2*c12\
        +175)*s1^9*c1^11-585830*c8-1144400*c10-249340*c12+1098208*c14+519396*c16-196056*c18\
        -133908*c20-82040*c22-35842*c24+22516*c26+12929*c28+1894*c30+1019*c32)+3*(1368670*s2\
        -1910495*s4+3490840*s6+1317326*s8+149620*s10+522816*s12-1381824*s14-805504*s16+337776*s18\
        +212736*s20+109796*s22+61986*s24-35824*s26-22679*s28-3050*s30-1849*s32)))-2400*(4366*c2\
        -4746*c4+4156*c6-6806*c8-2270*c10-2207*c12-3446*c14+1146*c16+572*c18+557*c20+544*c22\
        +38*c24+38*c26-654)*s2^3))-2*(227863*v^5+369240*v^3-105480*v-75600*s2-6300*s4+56700*s6\
        -80640*s8+69300*s10+70560*s12-80640*s14+70560*s16-5040*s18-80640*s20+13860*s22-5040*s24\
        +1260*s26+13860*s28+1260*s32))"),
        Some("(-3478923509760)*v^6*c1^10*s1^12*(v*((468896*v^4-2845950*v^2+504540)*c2+(3794666*v^4\
        +3508410*v^2-424260)*c4+180*((-3359)*c6+6514*c8-5660*c10+1975*c12+8736*c14-3088*c16\
        +88*c18-711*c20-3340*c22+526*c24+487*c26+133*c28+238*c30+4*c32+7*c34)+v*(v*(6*(218182*v^2\
        +75025)*c6-30*((-48938)*c8-205188*c10+189209*c12+123872*c14+9360*c16+34024*c18-47753*c20\
        -37460*c22+4522*c24+2997*c26+2499*c28+1846*c30+68*c32+49*c34)+v*(2*v*(31457280*v*(49*(25*c2\
        +9*c6+c10)+c14)*s1^9*c1^11-3244536*c8-1062160*c10+806275*c12+541016*c14+436792*c16\
        +145188*c18-269891*c20-141460*c22+11496*c24+10442*c26+10763*c28+5913*c30+274*c32\
        +147*c34)-5461475*s2+9728100*s4-1651927*s6+8272210*s8+5719296*s10-4891402*s12-2271864*s14\
        -1253544*s16-729384*s18+1169646*s20+708816*s22-69694*s24-53079*s26-51572*s28-31759*s30\
        -1350*s32-812*s34))-400*((-17068)*c2+33671*c4-46168*c6+9411*c8-34507*c10-29117*c12\
        +423*c14-7921*c16+7213*c18+6135*c20+1367*c22+1363*c24+36*c26+35*c28+14143)*s2^3))\
        -4*((-2116147)*v^5+59850*v^3+134820*v+5775*s2-26775*s4-30345*s6+67200*s8-17640*s10\
        -17745*s12+70560*s14-30240*s16-17640*s18+9135*s20-30240*s22+3360*s24+9135*s26+105*s28\
        +3360*s30+105*s34))"),
    ],
];

/// Series coefficients of b_1..b_7 in powers v^0, v^2, ..., v^10, as (numerator, denominator).
pub(crate) const SERIES: [[[(i128, i128); 6]; 7]; 7] = [
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 2853107712000),
            (1000430523577, 291016986624000),
            (-69882256253489, 1548210368839680000),
            (257597135900761, 1532728265151283200000),
            (-91527043218239, 3384264009454033305600),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 237758976000),
            (-1000430523577, 24251415552000),
            (69882256253489, 129017530736640000),
            (-257597135900761, 127727355429273600000),
            (91527043218239, 282022000787836108800),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 475517952000),
            (11004735759347, 48502831104000),
            (-768704818788379, 258035061473280000),
            (257597135900761, 23223155532595200000),
            (-91527043218239, 51276727415970201600),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 142655385600),
            (-11004735759347, 14550849331200),
            (768704818788379, 77410518441984000),
            (-257597135900761, 6966946659778560000),
            (91527043218239, 15383018224791060480),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 63402393600),
            (11004735759347, 6467044147200),
            (-768704818788379, 34404674863104000),
            (257597135900761, 3096420737679360000),
            (-91527043218239, 6836896988796026880),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 39626496000),
            (-11004735759347, 4041902592000),
            (768704818788379, 21502921789440000),
            (-257597135900761, 1935262961049600000),
            (91527043218239, 4273060617997516800),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 33965568000),
            (11004735759347, 3464487936000),
            (-768704818788379, 18431075819520000),
            (257597135900761, 1658796823756800000),
            (-91527043218239, 3662623386855014400),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 1426553856000),
            (680989543811, 116406794649600),
            (-125177474703917, 2322315553259520000),
            (517885739552761, 306545653030256640000),
            (-2572884198423151, 211516500590877081600000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 118879488000),
            (-1000430523577, 8083805184000),
            (161750007895703, 21502921789440000),
            (-2419392089643157, 6386367771463680000),
            (69067938626578009, 5875458349746585600000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 237758976000),
            (851496508169, 923863449600),
            (-3109822683210143, 43005843578880000),
            (17171854137770701, 4644631106519040000),
            (-1373640119936290727, 11750916699493171200000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 71327692800),
            (-7685041522471, 2078692761600),
            (37302412323393157, 116115777662976000),
            (-1150037153857349, 69669466597785600),
            (5553336881578048313, 10575825029543854080000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 31701196800),
            (4465879941727, 479040307200),
            (-14651758435060069, 17202337431552000),
            (5432847035340293, 123856829507174400),
            (-2192163846661534231, 1566788893265756160000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 19813248000),
            (-855811097959, 53892034560),
            (15982331031417479, 10751460894720000),
            (-436210741712267, 5691949885440000),
            (798931592780948369, 326414352763699200000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 16982784000),
            (130969300116257, 6928975872000),
            (-49277565690609847, 27646613729280000),
            (335110207212583, 3645707304960000),
            (-7395015266709846197, 2518053578462822400000),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 951035904000),
            (1404086671901, 194011324416000),
            (-108627551857199, 1161157776629760000),
            (3113473234169, 1621934672117760000),
            (-21678565330566029, 282022000787836108800000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 79252992000),
            (-1000430523577, 4041902592000),
            (3812117933243383, 193526296104960000),
            (-131666706221101, 133049328572160000),
            (766613393985947587, 23501833398986342400000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 158505984000),
            (67397661839051, 32335220736000),
            (-47508096701122969, 193526296104960000),
            (31127602487128507, 1548210368839680000),
            (-59333732949165745199, 47003666797972684800000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 47551795200),
            (-855811097959, 97005662208),
            (149201016148079837, 116115777662976000),
            (-407769624909121, 3225438268416000),
            (6653867251060213627, 742163159967989760000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 21134131200),
            (19713857381587, 862272552960),
            (-10823009510563069, 2867056238592000),
            (83749133157903719, 206428049178624000),
            (-189076914789983483663, 6267155573063024640000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 13208832000),
            (-26590548293789, 673650432000),
            (224945948304809533, 32254382684160000),
            (-12256588145611, 15672683520000),
            (232561853289543390209, 3916972233164390400000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 11321856000),
            (108959828597563, 2309658624000),
            (-117725260678970569, 13823306864640000),
            (35655584375317913, 36862151639040000),
            (-248038978837339401007, 3357404771283763200000),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 713276928000),
            (2211398968549, 291016986624000),
            (-33578069009689, 145144722078720000),
            (-144902264134913, 17516894458871808000),
            (-18020995400748499, 14101100039391805440000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 59439744000),
            (-1000430523577, 2425141555200),
            (66666008116601, 1860829770240000),
            (-11606680689206023, 6386367771463680000),
            (363627917613911087, 5875458349746585600000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 118879488000),
            (180183513998459, 48502831104000),
            (-6773330550886447, 12095393506560000),
            (8117004168919561, 142911726354432000),
            (-9618739589821913801, 2350183339898634240000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 35663846400),
            (-117366928934503, 7275424665600),
            (9440045489117267, 2902894441574400),
            (-154456853448146527, 348347332988928000),
            (156768697509684951877, 3525275009847951360000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 15850598400),
            (21053722246547, 497464934400),
            (-86689543640365, 8601168715776),
            (153981351646932977, 95274484236288000),
            (-98146042038903700999, 522262964421918720000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 9906624000),
            (-148538554003387, 2020951296000),
            (77089257945806723, 4031797835520000),
            (-9226172386459001, 2764661372928000),
            (16273137531259548461, 39169722331643904000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 8491392000),
            (60974002854799, 692897587200),
            (-20335903756276117, 863956679040000),
            (2799280124854146809, 663518729502720000),
            (-449833739846395057357, 839351192820940800000),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 570621542400),
            (7762618237, 1119296102400),
            (-7881601960439, 14744860655616000),
            (-27284304529514897, 613091306060513280000),
            (-1799866965050155021, 282022000787836108800000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 47551795200),
            (-1000430523577, 1616761036800),
            (604487352966331, 11058645491712000),
            (-75851624289432059, 25545471085854720000),
            (646544241473169703, 7833944466328780800000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 95103590400),
            (2349705253321, 404190259200),
            (-23296554826706981, 22117290983424000),
            (58594320744987337, 488908537528320000),
            (-144079291878124208197, 15667888932657561600000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 28531077120),
            (-74576374036553, 2910169866240),
            (95021198062331, 14455745740800),
            (-1557322122991096859, 1393389331955712000),
            (1918393406379510690887, 14101100039391805440000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 12680478720),
            (7297045929049, 107784069120),
            (-20692039318485463, 982990710374400),
            (5526609376838648143, 1238568295071744000),
            (-4320389579215898805647, 6267155573063024640000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 7925299200),
            (-1177252560689, 9980006400),
            (74732313119187721, 1843107581952000),
            (-3727799369309648939, 387052592209920000),
            (6574125730067577575911, 3916972233164390400000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 6793113600),
            (12244386604777, 86612198400),
            (-26404757298856247, 526602166272000),
            (8187780819568609243, 663518729502720000),
            (-7493224716658621457999, 3357404771283763200000),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 475517952000),
            (1017850218043, 194011324416000),
            (-355108221471443, 331759364751360000),
            (-131687699860605701, 1021818843434188800000),
            (-970130052388059581, 47003666797972684800000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 39626496000),
            (-1000430523577, 1154829312000),
            (2072463900685193, 27646613729280000),
            (-4147730814505219, 886995523814400000),
            (25097056509899527, 559567461880627200000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 79252992000),
            (270959894639173, 32335220736000),
            (-97479391651340473, 55293227458560000),
            (1103582448711358933, 5160701229465600000),
            (-135427504564083230351, 7833944466328780800000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 23775897600),
            (-180938567211709, 4850283110400),
            (192417404089068163, 16587968237568000),
            (-13040661300795157, 5582489310720000),
            (753690800700831259867, 2350183339898634240000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 10567065600),
            (60974002854799, 615908966400),
            (-31108033258478857, 819158925312000),
            (20614799744422537499, 2064280491786240000),
            (-283489566000723918761, 149217989834833920000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 6604416000),
            (-232891275659849, 1347300864000),
            (340402048152771923, 4607768954880000),
            (-1791871329414738589, 80635956710400000),
            (3257163476890690029371, 652828705527398400000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 5660928000),
            (478770728431733, 2309658624000),
            (-361861433042278873, 3949516247040000),
            (31765434645249520399, 1105864549171200000),
            (-3797117763219719452879, 559567461880627200000),
        ],
    ],
    [
        [
            (433489274083, 237758976000),
            (-152802083671, 407586816000),
            (42107584279, 16629542092800),
            (-48644589686717, 25519951134720000),
            (-8465930460350551, 29194824098119680000),
            (-1588162811844063649, 30216642941553868800000),
        ],
        [
            (-28417333297, 4953312000),
            (152802083671, 33965568000),
            (-1000430523577, 866121984000),
            (1319911328641663, 13823306864640000),
            (-633679429758461, 86889357434880000),
            (-13749338388459469, 91565584671375360000),
        ],
        [
            (930518896733, 39626496000),
            (-1680822920381, 67931136000),
            (2433446807381, 213199257600),
            (-150750689506359931, 55293227458560000),
            (151232830491144629, 442345819668480000),
            (-11391719790424784543, 387392858225049600000),
        ],
        [
            (-176930551859, 2971987200),
            (1680822920381, 20379340800),
            (-26590548293789, 519673190400),
            (154953352570753493, 8293984118784000),
            (-143381346778111763, 33175936475136000),
            (1938525891219194555527, 3021664294155386880000),
        ],
        [
            (7854755921, 65228800),
            (-1680822920381, 9057484800),
            (251688917686417, 1847726899200),
            (-8983100481771361, 144557457408000),
            (289598383359113, 14860025856000),
            (-2936244786853000878251, 671480954256752640000),
        ],
        [
            (-146031020287, 825552000),
            (1680822920381, 5660928000),
            (-3438345456101, 14435366400),
            (280448198337422053, 2303884477440000),
            (-408566151907529191, 9215537909760000),
            (10234561211810943225223, 839351192820940800000),
        ],
        [
            (577045151693, 2830464000),
            (-1680822920381, 4852224000),
            (282860542755301, 989853696000),
            (-45957876214170247, 303808942080000),
            (1822061164406572133, 31596129976320000),
            (-1213351274004131872663, 71944387956080640000),
        ],
    ],
];
