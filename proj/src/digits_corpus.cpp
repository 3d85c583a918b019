#include "dnne/dataset.hpp"

// Embedded 8x8 handwritten-digit corpus (UCI Optical Recognition of
// Handwritten Digits, test partition; 1797 samples). Pixels are 4-bit ink
// levels 0..16 encoded one character each ('0'-'9' then 'A'-'G'); labels are
// one decimal digit per sample.

namespace dnne::io::detail {

extern const int kDigitsCount = 1797;
extern const int kDigitsDim = 64;

extern const char* const kDigitsPixels =
    "005D910000DFAF5003F20B8004C008800580098004B01C7002E5AC00006DA000000CD500000BG900003FG60007FGG200"
    "001GG300001GG600001GG600000BGA000004FC00003GFE00008D8G000016FB00018DF10009GG500003DGGB500003BG90"
    "007FD10008D6F400021DD000002FB1000001CC1000001A8000845E90007DD9000001B00000078000001D6220007F0980"
    "05GA0G6004FGDG100003FA000002G40000CA000000EGGE0000DGFA1000BGG70000047G7000004G900054CG40009GGA00"
    "000CD000005G800000DG300000ED000000FC720000DGDG30007GBF800019FB300078DGF100774BC000008D100488FF60"
    "02BFF400000G5000009F100000D50000009E810000CEEC00009A0F40003GCE20004GG20003G8AD2001F13G8000BGFB10"
    "00BC000002GGGD0003GCAE0001G1CF0000DG9F20000309B000009F40009CD3000019FB0000BG8E6002GA099001G40880"
    "04G4088001G51B3000CCAA00001AD3000000ED100005GG20000EGC0001AGGC0003CEG9000005GF000004GE000001DG10"
    "005C100000FE700000D1C00002A0E0000020G1000006F000009GF982003B8DC4029FE93004D89G800006EF30000BE200"
    "0002FB0000002F400156DG6002CCDB000008F100001ED11000AF3FB007G71G8009GDEG5001AFGE000001GA00000AF400"
    "05CDGG200BGF840008EB100008GGE0000166G0000005G300015FD00004FG20000008F100000CE000003G7000006G2000"
    "007GGD5000FG99E0003E92G20007FGB00018FA0003DFEE0005A0AC000035FA2000GGGGC0018CE830000AD000000B9000"
    "00A7D900009ACF20004BAB00001GA10000CD400000C1C00001A2E00000BE5000006E400000BGA000008EG200001CCB00"
    "00000B30000005B0001447G2007GGDB1003DB70000BGGG2004G91E2004G00G2000G10C8000F90D60009E9E10002CD400"
    "0002GG200004GG20014CGC0007GGGC00003AGE000008GC000006GG200002CF40008G500001DBG00000A0D3000031G100"
    "0009C000003F500000EF8830007CCCD1018CFE4003B88CC000002D700002FC100000D50000009D000078EF0000EFB200"
    "0000C2000006E100004G780000D90G6006GABG00005ADG0000006G000000C80000C8870003GGB70002E1000005E50000"
    "02FG90000002G2000048G40000BE9000001DE300008GD20002GG300003GC100005GE500003GGGG6001EGGGC0003CFE70"
    "0008EE200006AFB000000EA0028BCG8008GGGG700000BF100009G700000CD10000AB400000AFDD10008B0E40000DFD00"
    "01BGG00001F39A0000E6FA00008E7100009D700000CGG20000CDG600006GGE0000002G30000009A00037CEG2007CCCB0"
    "00AEB30004GD6E1004G20B7008G00A5008G00E4008G01G1004G1BF0000BGC300002D8000006GG600005FDB000007GF00"
    "00000E30000007B0000344G2002FDED202DGGGB005GA541006G7300009GGG6000384BF000001CF00004DG60002GF8000"
    "06D5881008GGGG6006G9640006GGF5000045FC000003G900018DF30004GF30000005E200001DB000005G2000006F5000"
    "01FGFB1002DE1C90004G7D900005GF3003F8860004GGGD2003G9200002GGF3000076C9000001EA00005EF20001FE1000"
    "006EA20000FFDF3002GA0D9001G50C5000G30D6001F56D1000GBEA00007GB10000DA100005GE700004G8E00002EGG600"
    "00149D1000000D60005859E000DDFGD00077DG4000DD6C7000A4AB10008GA00003EG0000088B500004A9800001BG6000"
    "019GD70007E4AC0006F9GB00009B7E0000000F2000000B6003D85E50009EDA1000BAC40000CD9G10007DBG00001GE400"
    "00AGD00000E7C70004E4CD0001BEC4000009F100004GC00000FE2B3004G94GA009GBDG20009GGE000008G6000009G200"
    "0000C5000002GC00001CGB0002CGGA0006B5F6000001G9000002GB000003G8000009FC0000477E0000000D300498AD10"
    "04GFGG600000E3000009C000000B7000009GGG5001EA8G8000007G30038BFGB008GGFB30002G7000008G100000DA0000"
    "009GD6000065GG000008F5000005E30000009F2000000BC00048BFC000BEC80001F4000002GGGE2006GB883005GB5000"
    "00BEE1000005G700006GG40000EE40000001B9000007GD00004EG9000AGBG8000003G6000003G8000005GA000002E600"
    "002FD30000AFBF0003G60A0004G8038008E3048003F1037000EB6E50004CF600001FD100007GE80008C92D2007910660"
    "0590039000F208C0009FDG60000DE8000005EC20007F8E4000623D100001D400001B900008GD000005EGB2000006CD30"
    "0003FA10000BAG40000C1F6000034F400006F60004FG900000DGF93000049E70003CGG6000AB7GB000002EA005B89G30"
    "09GGGG900149G600000BE000004G50000048G500009G8B00005A0D20000D4F200009G800008FE50000G5E400006GC100"
    "0001EE30000ABD8000070D8000007F10048CF40006GG6000002CC4200001DG50002EF50000AGGF1003GAAG4005G00E60"
    "05G60C7001FD4D6000BGGF00002BD4000000CD100008GF2000AGGC0004GGGD000474G6000001G8000001G8000000CC00"
    "00019B00000DGG00000C7E000000E700005CC00007GG6000049DGB4000009D30000AD10001BC700002GC000004GB0000"
    "04GF840004GGDG60007G7DE00007FF5001AFB1000388BC000005EF10000BF2000004F2000000CA000034AG1000DGFA00"
    "00AFE4000046DG200003G9000001G6000000AC0000001G4001956G7000ECFB20006DG60003GEFG1000508G2000008G30"
    "03FGGG9005DEGB30000CF100004G700000EGE600007AGG300005GG100002G8000000CD1000004G700059EG7000DGGA10"
    "03GGE7100199FG400007GC100009G2000003F70000009F0001AAGG3002DGC5000006G400001DF10001BG500008GA0A60"
    "0CG89GC002FGGG700004GB000007G3000009A000007G700000DD100000F7000004GFC70002GC4BA0008E59E00006CE90"
    "000AB000009G600000FD000000EA000001FC820000CGGGA1007GCCG40009FC50005E000000C9000000F3000001G00000"
    "01G2740003GGGG9000FF4AG0004EGC7000099000003G900003EA02000AG57F1002BFGD100007G3000006F0000004G500"
    "006CD60006G9CG2007G9FD0000BFG400000CA000003G4000001G2000006B00000000E700000DG90000AGG70007G8G200"
    "0156G6000004G6000002G6000000CB0001DFCC5004G8860007D0000008FDF70001658C000000CB00002DE10003EA1000"
    "001DA00007GGG70008GDAF0008G22F3005F20C7001F62G3000BFDG00001FE80001CD400004GGG30004GGGA00006GEG00"
    "00000G4000000D7001237EA002CGEC3000DD820005GGGC0001FC000000CD7100008GGC0000049G300015EF1000AGG600"
    "00009D000002GG1000059F0000005E000003F70007GGB00000BEG73000009F90035ED60009GCAC0006G3CB0001DAG600"
    "00AGA00001FGA00000GCG000003FG5000000BF400003GGC00008EGC00005AG60017BGD0009GGE100038EG9000001BGC0"
    "00ACA00003GGG40007F38D0008C00E1008C0078005D0048000E80A80007CDC40004EB00003FFG90008D03F1008C00860"
    "08C0088005D1088002FECF60005GF8000001ED100001GG3005BFGG0004FGGF000008G700000AG3000008G6000002DF20"
    "003EGE0000DDDG2000109F00009CFGA004GGGB300049E200002F9000004D1000000AF300007GB00000DF100000FB0000"
    "00GD810000FGGF6000AGEGE20019FGB002DFA4000054DF200000BG400000GC000000DB0000008D000168EC0002CEB100"
    "01DF200006FF9000098AD000053CC000003G600005FF100006GFCCB001BDGGC00001G5000005GB00000CGB0007CGG700"
    "048CG4000009G200000AG2000003D5000027FD1000EC9E8000200C8000000D6005GGGG500257DE200001F500000B9000"
    "0009G400019GD2000EGE80001FF5G90005GGG800002DG100000BD000000BD000000AB000003GA000008G000000CE0000"
    "00EGF60000CGCF60007GADE00009DB6000DGF4000098DG300000DG700001GC000000FA0000008F000036FG7000FGGB10"
    "0001C8100004GG10001DGB0001BGGC0002C8GA000000F8000004G4000003D40004EGGC1002C7EG600005GA000004G700"
    "0004G6000001FB00018AGA0005GGF100009DE50004GADG0000DFEG1000037G3000004G0000001G3001F58G20007FG900"
    "000BG500000AG500004GG5000BGGG300058EG200000EG200000BG2000008G800003CGA0002ECCC0005A0AB000001E920"
    "008GGGA0006GD700000G5000005D0000000BG800006GD300008G800000DG200000FG500002GGG50001AGGE00000CGF00"
    "019GFA0006G87G3000BEGB1001DG600008FG300005EAB00000F7G30000BG80000003E100000DC100007G530003FB5G20"
    "05GBBG60006CGD300001F7000002G70002FGGD2001A8EG800000GF100000G8000000EE000000BG1002EDGG3002FGE500"
    "001FD000001GG500007GG00000DGD00007GGD00001BGD000002GG000001EG3000002D0000008F000005G520000FC1G40"
    "04G29G8000AEGG400000D8000000D600001C5000009GE30002GEBD0002GA0E4004G00C4004G30BA000DC8E60003AGC10"
    "00CGG80003GD850002G3000000GD900000AGG7000001AD00002BGA0000BGC00004DGGC300374DG600008F500000C8000"
    "0007C0000004C000017CB00003FC20000008E400007G700000EA000001G6000003GGA00002GCE60000CFBA00000AD800"
    "009F500000DED700006EAD100009CF5000000AA0000007E000389FF0005CC9100005B100000EE200005G5000008F2000"
    "00AD000000EGG800006G9F600006EG8000006A000000EF00000AGG00007GGF0003F7FA000000DB000000F90000008F00"
    "002BG40000C9BF1000204G0000028F1004GGGF700364G3000006B000000C700000FGGC2002GFCC3004G8000008GC4000"
    "00CGG0000003G8000269G80001FGF300000AF00000BF300007F400000CB1382004CFFG900008G820000AC000000C9000"
    "001A9000009F400001G5000004G14E4004GCEG500017G9000002G400000AD000003BGD0003FFDG0006829E000047FE50"
    "04GGGE60018DC000001G4000003F1000002GD100006FG7000036G8000003G600001DD00006EG400009GGDA30004BFGA0"
    "0049D50001GGCB0000B85G00007ADA00004GD00000DFC00000B9E500000AG8000008F800003GCG40002A1G4000008E00"
    "0009F30003GE400004FE71000009CE40001AG80000BDAG0000C14G100010D7000009C00002DF100004FE7400001BEF50"
    "02FGGE2003GE9A1007G6000003EF6000001DC0000008G000009GB00003GD1000009CFF2001FEBG7000202G400024AF20"
    "00DGGG9000DGA100006G100000B90000000CE100009GA500008D5E00002EGG4000004AA0000004G0002649G0001BGF70"
    "006D200004GGGB0000CB161000CEA2000018CC0000009E000049G500009E4000000CD000005GA00006GDBC200CGAFG90"
    "04EGGC40000ED000000EC000000BD0000036E500007FFD00003EDC00000GD100002G800000A9E00000C4F200004FE000"
    "005EF400008GGE00005GG900000FG100001GD00000BFE50000CC8F10005GGG200008E000005GB00001FE160007G53G80"
    "08G8EG20006EGB000006G400000AF00000CG700002G5C30000E63G20002EGC000000AA000000A8000082D70000BGG300"
    "003CA10001GGGA0005GD6G1005G70D3005G40D7001G80E7000DEDG30002DF60000549A0000A8BG20008CEE10005F7000"
    "00EC000001ED300000CD5000007G5000001BF80000CEAG5000G7DG40009FDG4000001F4000000G4008GE9G40002AFF20"
    "007DF500008GGC00007GF300006G5000005G2000008G600000CCD000005DA000002C900000BFC50000F50E0002F10970"
    "04A0078000C008A002F5AG10005EC40000005F800002FG90003FGGA007GA8G7000108G400000BG1000009G1000008E00"
    "02FG600005GFE00005DAE000000CC000001G700000AF200003GA861002FGGG7003GGCC6000445E800000BB000004G300"
    "0000CB0000009E000037F40003GE40000003G300000CG200008GG40007GFGCB008GGGD300007E1000006G0000004E000"
    "04GGGA300CG98C300AG2000003GC0000007G9000000CG10003AFF10004GD3000002F400000BD000000G6000003G70000"
    "04GGF50004G53D7001E908D0002DGG80002FF300008EGB000000BE000000BE30004CGG7000BGC100001E6000004C1000"
    "005CD20003GEGD1004G9GC10019GF10001DGG50003G5CG0003F7EC00006GD300005F500000CBD80000B9AG00003FGG10"
    "00000E6000000D8000630E60002DGF3000C9C10000EGG80003G93F2004G10G5005C00G5003E14G4000FCEE00007CC200"
    "00007D500000FG80001DGG3000CGGG0008G3GD000230GC000000GD0000008C0000DE810001GGG6000035G8000009G200"
    "001G900001GD000005GB440001DECC0006GGF70002BCGG500000EF200001GB000000EE0000005G900037CG7003GGFB10"
    "0005E000001FD000009GD00005GFD00008GGGF90004AE8500008C0000007A00004FGGG4004GF971000FE1000005G9000"
    "000EG0000009G50003ADG40005GGC0000006E100002GA00000BF200000DD850002GECG3001GB05C000BF5CC00009FE60"
    "003FE10000DGG6000044G8000001GA10007GGG8000CFG600000EB000004C1000003DD30002ECCB0004G85F3001DEG700"
    "00BGD10001GCDE1000DD9G70003DGA10006DA40004GFDD0004GEGG1002AGGG5000003G5000000G8000028G80007GE910"
    "002C400001CGG30007G64D0008G60D5001G5079000G808C000DEEGA0004EF70000005E3000009G800009GG5001DFCG10"
    "04C3AF000000BC0000008C0000005D40006DA30005FBGB000260GC000000GC000007G600005FA00000BG8400008EDC40"
    "01BCE60001648G7000003G500002E9000004G7000001ED000001CE0005CF91000003G300000AGB00004GG80002ECG500"
    "0AGEGGB005CDG8300002F3000004C00002EGGD5007GD88100AF000000AG0000007G6000001CG8000018GA00003GF1000"
    "000G7000006G400000BF000000CC000000FGG80000CGDF8000CG7DF0001BGF9000AGE10000EGG7000015G700002AGB60"
    "07GGFC700BAFA000006G200000D90000002DD100008GE400005GA840001GGA2002FDC00005C3F10000E3D400003FD100"
    "005D400000FEE50000C78G10004DGG1000000F2000000E6000278G40006CDA00005EA70000GGGG3003GA2G7007G30C80"
    "08G10C8007G52G4002GFED00007FD200002D6000004GF500001FCF00000AGG1000002G2000000F5000446G30002EGA00"
    "05GGGB1004GFA81004GC000001DG5000006GD000000AG400004DG20002FG900006GGGFA009GD86500CG100000AG70000"
    "03FF3000003GD000015G900009GB0000005D100000CD000000G8000005G2000004G8F91004GGCFB001FE4EB0005EEA10"
    "02FGGD2007GD883004G4000000GB000000CG3000002DB000038F800002FF1000005GF10001F9AC0003G10G4006G00B60"
    "03G10B8004G43F4001DDDE10004DE100002D8600007EEG0000793G40005EFG4000032D5000300C6001C60B70003CGG10"
    "006FD30000DEFC0000EBDF50009GF80002GGG20008G2EA0005G9EB00008ED200006F600000EBD40000B77D00005GGG10"
    "00000E7000000AD0002B0BC0005GE940002D4000008EB00000A6E520002ECE00001FD20000BDE10000D8A400002BG700"
    "0008D000001GG000007GG00001FGG00006GFG92006FGGGB0000BG000000AE0000000EG700005GG80001CGG8005EGGG50"
    "0147GG800002GG700002GG300000GG00007GGGD000898FF000004G700048CG5003GGGE700038G300000FD000007G3000"
    "0018AFB002EFDG7000606E200003BC20002GGF80003DF200000DA000001G500001AGGB0005A8CG400001AE000006G400"
    "0007G5000001CG4000249G4001FEB40007GGGB2005GC861009G1000002GF3000005GE1000002GA00017DG30004FG6000"
    "0000CB100001GG70001EGG7001EGEG8005C38G7000008G4000008G100000BC00006FF30003GEED0006F21E5008E20980"
    "08G4088005G60B9001GGEG90005EFA10000AF100005GGA0000E66F0004G40F3005F50B5000CB0D50008GGG300018D800"
    "007FF40008GGG40008F8G400000AF000001F9000006G2000008G8B90009GGC3001CEA00005GGG4000004G4000007F100"
    "002F9000009F200000GE883000AFD940005GC200004BGA000000EB000024EE2000DGGA40003AE000000F5000006B0000"
    "005FD30000CFCE0000CCEE00003GE300009EF30001F58C1000G44G40005GGC2000BC000007GG500005DG8000001G8000"
    "007G5000009F100000GF972000CEDC50002FD00000DGG90005G96G4005G31E7006G40G8003GC6GC000EGGG40002DF800"
    "0001BE500009GG5000AGGG1005GGGG00015BGG000005GG000000BG000000BA00009G500006GGF00007GEG200036CG000"
    "000FC000007G6130009GDF80007GG810004E600000AF200000GB000000DB000003GC830002GE8C9000GD4CC0006FGC10"
    "04CDD60006E8DG000000BG200000GF000000CG3000004G900014CG8002DGC60002FF600000ADG5000002G9000003GB00"
    "0000DE1000007G500146DF1003FEB20000FF2000008FB000000CE000007CGD9007GGGA50015GE000009F300002G40000"
    "01AFGD3005E55F8000002F6000009G0000009G0000004G600023DC0000FD700002EGE40004B5DC000002F7000004G400"
    "0001DD1000002G400013BF2001CG92000000B5000008G200004FG30000C6G30005F0F53006GGGB400000E0000000C200"
    "0006E300002GB00000BF200001FD200003GGG70004GE8D7000CG5CA00008ED50001E6000007G100000DA000000E70000"
    "03GA830000GDCE7000E94BD0002CGC40002EB00000AG100001G9000004G5000005GCCB1004GEAEB002FA6GA0003FGA10"
    "0002F4000008F100001EC000006GC00000DGF42009GGGGB00388G3000003F000006F500001FFF30002G6BE0000FEFG10"
    "0038AG5000003G800004AG80007CDC100000BC000003FE00000BGB00009GGA0004GCGC0003A3GB000000GE000000BB00"
    "02GGGE5009GB683009G2000003GD1000008GC000000CG400001BG60004GG8000004FB10002EEG80008F23D0004G00C70"
    "07G00C8003G61E9000FGGG20004DE60000AF700004GDBB000AGCFG4003CCEG400000AG4000009G400044FF0001CFC300"
    "04GGGG500BG858300AG2000003G6000000G9000000CG2000006GB00004GC1000003DC20000EDFB0000708F000000D600"
    "0003G400000DB000003GC810003GB80000AD000000EFB00000C9G820005EGB10003GA00000CBG00001G7G50000BGD100"
    "005EB00000FGF00000A8G1000006E000000C9000001G3000008GCB00007GC700002CC20000AGG90003GG8F3006G60D80"
    "08G40F8005G8CG6000FGGF20003DC300000E7000019GG30004G8BB0003G74G4008G40G8005GA0DB000DGGG90002AD600"
    "00007E700003GG90006FGG6005GGGG200488GG000003GG300001DG0000008F00008GD000007EG400001CGDC100BGGE90"
    "00AGE100000E9000003G100000C90000003E300000DD000000G7000005G3000003G7420004GGGG7001EF4BF0005EGC60"
    "02EGC60001A8EG100000AF200002GC000003GC000000BG20007AFF2003DB720000AG900004GGG00002C9F000000BB000"
    "001G7000009G200000FG850000BGGG2000007F100000BG000000GE00000AGF0000CGGB0005G6FC000010CG0000004F40"
    "009G300000BGE100000BG4000008GA1001CGGG9001BGB400006G400000BB000000FGB300004AFF300000EG500005GC00"
    "0003GB100002DG90006FGC3000FE710000003F600000BG700009GG4000AGGG4004G78G400140AG2000007G1000003G10"
    "01CCD8100089FG200003GA000007G6000005GA0000007G700038FD2002EGA10000BG800006GBD90007G09G0002FCGG30"
    "00577G4000005G500037GB0000DGB1000004EE500009GG70005FGF3004FGGC0005GGGC00000CGD100008GG700004EF60"
    "004FGG500069BGB000003G500003EGA0007GGB30008FD000005G7000007E20000008C100001FC100006G3000007G1000"
    "01GGE50001CG6E90002G6AF00006GGB0000AC300008GFE00005GAG10005GGA1001GCG80001G34G4000CB4G90002AED40"
    "0007F100000FG100009GG20002GGG0000AGGGG8008FFE850000BC0000006F10002BGG81002C99GA000004G900002FG00"
    "0003GE000000DG30004BG80003FC40000001GB000001GG400008GG0000AGGG1006GEGF000135GC000004GC000002FC00"
    "0002F800000BG400009GG00003FGG0000CGGGE6006CEGC500008D0000002E100004CA10003GDFA0005G21E3008D00A80"
    "08C0088008E00B8003GEDG20008GD50003FDC81004GECC2000G4000000C90000007G3000000E8000005FA00002FG2000"
    "005BGG8000FE8CF000002E900000BC100001G5000001E9000014F900007GB200000BE00000AG400001FB000003GC8200"
    "07GGCE3004G80A9001CF9EA0002ADB10005F700000EGG50000DEEF00003BEG3000006G2000004G700001BG60004FGA00"
    "003F400000CG200001G7100003G1610003F8CD3002G207C000D949F0003DGF500000AD700005GGB0004EGG7003EGGG40"
    "07GGGG40002DGG30000BGG000002DG10009FG50000GGGD000003GB000027GDA002FGGC4003DGA000007G200000CD0000"
    "00DGC70004GFCC3004G5000003G9000000FG2000004GE000019EG00001DGA0000003D1000008G300001FG400008GG100"
    "02GEG5100BGGGGA0058BG4100002G2000000F9000008G500001GG50000BGG11006GGGF9007FGGA100017G1000001F500"
    "007F6000002EF2000005G6000005G92005EGFB40057CB000004F100000AB000002FD00000CGG300005DG4000008G4000"
    "008G400000CG000000GGGE6001GGGC70002CC000007GF910006EDF30001GG400007GE00001F9G50002DDGA00001BC500"
    "02FF500005GGB00009FGC000004G6000008G200001ED000004GEEG5002EGD910004EG40003GGG60008GCG700035CF000"
    "000FC000006G2000008GC510004GGF4003BFC71004GDB96004F0000003G8000000BG8000000DC000017G300005D60000"
    "04D9830005GECC6008G1000003GB1000008G9000000AG000011CE00004EE30000000DB000008G500003FG400008FGA10"
    "04GEGGB007GDFE300000GB000000CB00003ED100009GG900008GBF10002EGF20006GG60000FBAC0001GBBF00005DF700"
    "002GA100007GGC00003GGF00002GE000008FG60000D89D0000CA7G00003DFA000005G300001FG40000AGG10003GGF420"
    "0AGGGGC0017ED650000BC0000004A000007GB10001FCCC0002G26G2001G66G60007GFG9000000CB000336G50008GE600"
    "002ED00000AFF80002G74F0004G40D7004G10A8004G51CB001FEDG30003CD500000CF600005GDF00002GGC10000BGE10"
    "007GFA0001G82E5000CA4C70002BGD30003C500001FEG60006G06G6005GBEG40008ACG0000117F10008AAG20002DE700"
    "005EF20000DE9A0000F82F3000BC9E20007GE20000DEG40003F8EA00006GG800004BF80000DGBD7003GC048006G50480"
    "0790097004A02F2001GCEA00004EE100000DF800001GGA00001GG800004GG20000BGE00002GGA00000DGF200001DG400"
    "006E800006GAE4000B50B4000462G200000D7000007E000000CA8840007EEED000AGA10006E6G3000545F000000CE100"
    "0003BF1000000A8000988F60009FF900000C4000006F200000G5044004F23F9002FGGG400028G8000008F000000B9000"
    "0068CE0005GFC70008GD400002B8EB0000000F1000000E500198CE1000AFC300003D600000AF200002F3000004E00000"
    "04EEGD2003G914C000EA5BB0003DF800006GGGGA006A8EG300004G80002AEF60006GGG70000F9000006G600000AD1000"
    "001ADD1001DA4E4008D07C0002CEF200005FF20000873D3000880D40001BGG20006CD50002G98F2008C03F8004FCGD10"
    "0022G6000001G1000005G000003GE000004D800000DGF70003G96F6008E0048008C0048004C00B6000EACE10007FB200"
    "0000E4000003GB00000AG900000DG70000CGG40001DCG5000004G9000000EA0000AGB00008FAF2000BB2G5000756G300"
    "001FA00000AG200000CE8A5000CGGGF0006FGA0003GBFA0004AAG400004GF3000019GF2000003G600039CG50009GG800"
    "000DC000006G700000FF114006GA9FE009GGGG40028CG900000DG000000EF10000FGGF9006GDCCB203FE2000006G5000"
    "000EB000000C800001EEA00000DG3000000D9000008F500000E8000002G3020000GDGG6001GB47C000BC5D90001CFB20"
    "004CGA0000FCCB00001097000047FD7006GGFA30014C7000002G2000006C0000002CGA0000C71D4003G08C0004GBE100"
    "007G6000006CF2000087D400003DG300004EGF1005G84G7008D04GC007GFGD30006CG400000BC000000G7000003G2000"
    "005FC80000DGAD3005G9084004D104800480084001E00B3000C99F00004EF4000004DD00000AGG10003EGD00008GG500"
    "03FGG40004GGG600028FG9000004EC0001DGG40009F6D80005A0CA000006G500005GA00002GB000005GD885001AEGGG0"
    "008EE40005C47C000423D500000GF10000039E100000078000344D7000BGF500001B3000009G000001G5012006G21DA0"
    "07G9FD00029CG100000E9000002G700000B7CF1001GE960008C0000005EFF5000164A90000004B0000A4D80000CGA100"
    "004C100000ED000002G3000007D0000007C7C62004FFCDB001DG5BC0005DGB10004DGGGA00BFCDG500000CB000105F20"
    "00EDFF6000FGF920001G7000006E2000002BGC2000B7478005E4084002F96B00003GB000009DB00000CAG100002CG300"
    "009GC20000G35A0000D4EG40004GGG7000034A400000086000C11D30008FG900002CFC1001EEEB8005G3028008E00680"
    "04C0094001G11E1000B9B800002DE100003BD50000AC5G00007A6F40002DGE6000000790000004B0009708B00039GG60"
    "00688D3001EEC93004G8200004GDF70000003F0000003F000068D800009F80000038990006GC85000BD0000009GA5000"
    "0038DA1000000A7000524D80007GE8000008F200006G500000C8000000D6000000CCGE0000EF68B003CE5AD00009GD50"
    "015BF40008GD62000B7000000BGGB20000445C30000005B000160AB0002CGF20009GFE1001FF5A7006G1018008D00480"
    "0760066005900D1000G5CC00008FA100007DG70002G65C1004C01G4001CCDG3000048D0000004D000083AA00006FF300"
    "004FEA100079098000B92D70004FE400006FF10004E1D70007D15D00007EGG10004CGC0005G84C200C600D4006GDGG70"
    "00341880000004C000892990002DGF30005CFA1002E7497007F70980015FBD30003FG50000F9C70000F58C00004EGB00"
    "0007A000003F500000BB022005E21D7007F28G3003EGG8000007G0000006G200007C900000CGG10000BGG00000CGG000"
    "00DGG00000DGG00001EGG100004CC900006GG90000E9CB00001096000016GA6000AGEB50005F2000003D000000780000"
    "001BGGA000DE8CB000400D4000003F00002FGG90003DG8100007A000000D3000007FGC0004GBCC000271DB00000DG600"
    "000BFG3000001F80005GCF80007GGD20006EEDB000EC542003GG400002BBG30000007A0000001B000037C800007EB100"
    "000AD000000DG500000GG400003GG700007GG900009GGA0000AGGE0000157F80002DA30000AFCD1000G4064002G30170"
    "05D5028004C0038000D56D50005ED810005DD50000GGAF3005G2184004D0048008C0067005F0077000G85F30005EF900"
    "02FG70000AFAG20009B5G000000CB000005G200003F8000008F5583003FGGGA0005FF20003G9G5000591G100000A9000"
    "001G30000099000000BE7620006GGF20003BGG40009CCG9000001G800009EG90001GGE500006G400000BE000001F7000"
    "004DGE2002F54E4008F61F1004GGDA000019GA00004E3E60009A3D80003FGB10007GG30007G9E7000A90E5000334G200"
    "000CB000006G300000CF883000AGGG90004DB70000EGDG2005G4057008E004800690048002E1086000DC9F20003GC500"
    "0000BE300002GG20000BGE00003GGF0001DGGD0006G9FD000000CG1000009E1002BGC10009G9G4000E74G1000659E000"
    "003G500000DE000003GB8C9002FGGDG1003C300000DE200003A000000003530004AGGG4006G4089000FC49C0002DGE40"
    "02BGF2000CFCG4000336G200002FC000003GGC1000016FA0006C8EB001GGGB30007EGB0002GBBG200033F900000AG800"
    "0003EF2000001G60003CDF20006GC500005GGGGB006955F8000009B100036G30005GGG700048G410001DA000003G2000"
    "02DGGB000AB4CC000114E800002GG80000079G8000000AC00059AG9000FGD70001AGG60007E9CC000115F500003GE300"
    "001BEG6000000CB00078DG5000FGC500001E8000008G400001G9015008G51CF00AGCBG6003EGG800000BG100000DE000"
    "002C800000CD500001G1000002E0000002G5AA4000GE86D000D924E0003AGG70002DD100009D500000D5000000F20000"
    "00FA992000GB8BC001EB14D0003BGF40001D4000005F200000C7000000E6000000GCFF7000EE64E1009E34E20017EGB0"
    "004G600000CF100001GB000008G307400CG6BG7007GGF300004GA000004G60000009FG9000AD4C7005E12F3004ECGF00"
    "0011D7000004F100000B8000000C4000001FB100002GG700006GG500008GG400009GD00000BGD00000BGB000001EG300"
    "002AG4001AGGF4000GGA10000FGG700005B5F2000000B900003AG900002GF2000058B50000DGCC0001G9093003G60660"
    "03B1056000C00B6000E5CF10006GD200003EG80003F84F1008A03G8003FDGE100025G4000008B000000F2000002D0000"
    "0058CG4003GB710003E6400005GCE60000204C0000004A000068E700007D700000BGF50008GEG8000BA0G8000316G200"
    "001FA00000BF100000GECC8001FGGE80004DF90004E65G0007C22G0004GFE700009GG50000A68F2000B94DB0002EGF60"
    "02FGF20008E8E8000752G500000CD000008F100001F7000004G9882002FGGGD0003BGA0000AGAE6000F70B8003G20880"
    "04C0098006F10C8003FA8F40005CE900007F950000EGEF0001G8464004F1065003B0075003B01D2001D8DD00006FB100"
    "0002D9000007GF00000BG700000FG200007GE00000DGE000008FG0000003D800003BGF1001GEAG2005C08C000011D900"
    "00BGGD2000BEFC50000F9000000F50000004F100000D8100006C0000008A000000DCBA0004GF8BA0017F43C00007FG80"
    "008EF60004GCEB000481E700000EG500000BGG2000001F70004B8E7000BGGA0000AGG70006F9EC000350D800000AD000"
    "002G400000C8000000GDB83000CGGG500000AB000000GD000007G900000DG30000AGG00000FGG40003C6G6000000AD70"
    "003DGB0000ECEG1000607F000000CB00008DGE4005GGEC40003G3000008D0000002DD000009G600000EG204005GA1DF0"
    "07GGGG40008FG800000EA000001GB000003B000000CB000001E1000002F0000004FFGF2001G848B001GB7AC0005ACF70"
    "00CGGD1004F9CG200020BF00000CG4000008GD1000006G6000466G6000CGG900000CF200000DG800000EG900000DG600"
    "007GG30001GGG100008GG2000009G70002AEB10007F8G4000116F100000F9000001GF91000016F8002846F7002DGF900"
    "002AGD0003G82G1008D02G6006GCGG7000248C100001F3000009A000001G3000001E7000006GG100007GF000006GF000"
    "006GF000004GG100004GG600001FG800006FG30003GCF8000040E6000002G620004EGG8000FG7000006G000000790000"
    "000BG200007G820000F7000000G4310001GGGG4000EC46C000AG5AF0002BGC80003ACC2001DC6D8008G88E1005EGG300"
    "00CGF20003G2FA0004G8CC00009GF3000009B000002F800000BF138006G40EC00CG4BG5009GGGB00006BG700000AG400"
    "01CGA00007B7E1000223E000003E600000CGG60000205F6001B44D8002EGGD10003GB000000GG600000DG700000BGA00"
    "000CG600003GG200005GF000003DF000002FC000009G502002FA0BG10AG46GA006GGGF10006DG400000FD000006G5000"
    "003E700000EGE90004GGBF3005F604800880048005B0066000DA5F50002CE800005BGC0000GC430004G6300004FGG900"
    "00003G6000000B6000018F10006GD100006DGA0004D54G000001A800000CG30000037F100000098000863B70004EGB10"
    "001D7000007E200000D5000000G3000003GACC3003GB59C001DB4DB0001CGB20003BFD2002FB8E7008E02D2003DGGF10"
    "0000E5000007E000001F4000002G1000001AE000008EB30000G2200003D0000004D06A3003FDCAC000AG45E00009FE90"
    "008GF80001GGG20002GGA00002GGC00006GGD00001GGB00000GGA000007FF000008GG10001CAG5000003G6000006G200"
    "04CEGC500CGGEC50006D000000B8000002CDGF1008GEB70008G7000007GGB1000026F90000009F000017GB0001GGD100"
    "000AE000001GA00000AG100004G803500AF02FA00CGEGD1002BEG3000008G2000007C000003E600000B8001004G31AA0"
    "08GCED3002CAG5000006G0000006D000002DGD0000EFEG000050AF000000DD00007EGG7000EGEA30003F5000004F0000"
    "007CC20005F6A9000B40B6000302F200001D600000BB100001G7442000BCDEB0007DGB0003G54E2008B14F2003CEG800"
    "008GF10001F5BC0003G57G10005EGF2003FGD1000AD9G4000110G600000AF10000AG300003G7000005GDC72002DDDGF0"
    "03DG90000AFDF2000F44G1000005G200001ED00000AG500004GD8A9102GGEC91007BCE2008G943000AF5000003CGE400"
    "0002DG2000000F9000248F9000AGD8000019GG3000EB8G8000400F6000007G30006CGG9001GEG5000028G000000C7000"
    "0005DG80008F67E002G11BA004GFGG6000445F10000098000002F1000006A00004AFGGE00BGE852006G8000000AF1000"
    "002G5000000DA00005AEA00003GF3000001F7000006G300001GA013005G31CF00BG8EF3006GGG500001EB000002GC000"
    "004BE40005D4970007AAD200019GF20000879C0000C01E5000B60780002FGF40003CFE3001G508C006GB2D70029FG400"
    "003EG70000956F0000BA7G20003CGD000006G200002FF00000FG323007G73FB007GEEG50017CGA000007G400000AF000"
    "00029GA0007F87C001F30BC008E9DG8001773D4000005D000000A9000000E400005B410000FGGB0002G92C4006D00660"
    "03D0059003G0068000DC8G70004DCA00001DGE4002B84B7006G33D20009EE400007GA00000CAG10000BAF400001EF100"
    "0009FC1001BC5F4006E00D7005GCCG400038E8000002F1000009A000000A9000019FG90006C12G0000108E00000AF300"
    "0007F50000004D2002744E30009GGA00009F500003FFG4000AE09E0008C00C5008800A8005E00C8000G7CG40009GF700"
    "0000DG60003BGG5005GGGG4004A9GG400000DG400000CG400002GG700001CE50007E500005GGB00002E2E0000005G000"
    "0008G000000BC00000BGE8A0007CCCF2008CCE3000BBAG2000009D00000EGD0000088G4000300G4001G99F2001BEF300"
    "0002D1000009F200004GG80000C9E60005E0D71009FCGG400289GA100001D20000CDCCC000GDCBB000GDB20003GEG700"
    "0000BB0000008B0001EBF90000AEC000001BE000009GC00001G7000007G5540007GGGG5000GD4D70009GEG40001BE900"
    "002C8762009GFGG500DB0AE000B32F400000B9000008G400000FC000004G20000016893000DFCB7000DB0970005FFF00"
    "001EGG0000B90G10009AAD00003B9200007ED80001FDEE0000DDDG30004EDG4000000C4000000E4007G9AF20018DF800"
    "004DC10002FEGD0006G46G5008F10C8008C00C8005D01D8001FACG30006GD4000018G700003GGC0001FGGC0003CFGC00"
    "0008GA00000BGE00000BGG100005D700007D300000FGB00000E5F3000062E5000000C8000006G440007GGGG3006F6991"
    "00AGA00008GEG20003F8G300000BG7000003AF2000A00E8001G68D8001FGDA10000B4000001G430000A9G40002E5G200"
    "08D7GB200AGGGE10000BD000000B700001889D8002GGGE9003G2000005GGF10005A8F5000000D70000FCG20000BG9000"
    "002BD40000CGDF0000G9130004G6E91007GGGG6001GE4G8000CGDG20002AG700001889C7008GCDG500B608B000F31F30"
    "0010A9000003D100000D7000001B1000005B870003GB9G4000E37F00005FF30000AFE10004D0970003B5D700006A6000"
    "005GB00000CDDB0000D86G00007EGG4000078E70004008C001FB8DB0005BCE30003CB10001EEF80003G25G1004G00E60"
    "04G00B8003G20A8000AFDG30001FE6000005FD10002EGG40008GGG4006FGGG10037AGG40000BGG10000CGG100006EC10"
    "009B200008GEC00009A5F00005A4G1000005F000002D921000AGFEF000799C40003DD10000AFG7000053FA000000GF10"
    "02704G8005D00E9000EB9G80003CD8000004C000000CG800004GF80001F8E70006G8EE400AGGGD100002G4000004D200"
    "0068BEE001GGDC7000G7100004GGF1000156D9000060C90000CAG40000AE8000001BE600004GE40000CG200002GGC500"
    "07GGGG3003F50FD000BGEGA0000CD910002AACFA009GC8F600D904C101G31D20005097000003D100000C7000000E2000"
    "001BE50001GE6D1009E20G4005D06G1001FGGC00005E3D40003F7G10000BG800003EA30000AEDF1000C44G40006FFG80"
    "00188E80002009B000GA8CC0007CEE60004E900000DGGA0004G45G6008E01F5006G00D4004F17G1002FEG700004D9000"
    "005EB10000GAED0000E28G6000C7AG80005GGF8001312B9001F64CB0006GEC3001EDC85004GBCF7008GGD1000397F700"
    "0000890000206C0000G8CB0000CEC400018CGG7007GCCC5004D3000004GGD0000286F60000709C0000GBDC00005DC500"
    "0019EB1000AF9D5003G7000005GGGA0007GBAG5002G50C8000AFDG500009C70000BACEB000GGGG7001GGGC000152BF00"
    "00102G0003C03F0006F8DB00009E920000AF600002GEG70004G85G1005C00C8008900C8005C01F3004D4CD00009GD400"
    "009GB10005GAG90006E19F0001F6BG20007GFG7000031B9003E99EC000CGGD30004FD30001GDGF1006F04G4003FEGE00"
    "004GGB0000BC8G5000GACG30007GD700017CD30007D6FE0006A0DG0001DDFG1000041C8000000C8000CD5E80005CGB10"
    "005C910000G9F90002E1AC00009EGB00003FG90000CA3D1000B85G30004A83000005E000000DEC00007D6D0002G3AB00"
    "06GDGG500289GB200003G0000007C0000001C7000009GG10017FGE0004GGGG000003GG000002GG300006GG000003FD00"
    "0018BDF3007GAAG501D309E003F02F400580AB000002F4000008E000000D7000006CCFG602FGEGF303G66G6007F4EB00"
    "0128F300001G9000006G4000008G3000006FE20005GBEC0005B3G500000EG7000008AG3001400C7007G56G50018FGC10"
    "00389BE1009GGGD000G5800004GGG60002929A0000008800008CD500005DA1000005G800004GG80002FGG800048CG500"
    "0006GB000006GC000006GF100004FB20002FA10002DCE90006G11E2008G00A5008E2088006E0088001EC8F60003DG810"
    "002F8000007EF80007F33F0006G1098004C0088000C30C70009DDF100019C50000BF400005GFF00000EBG2000004G500"
    "0004G6000007GA3000BGGGG600BGA5D600CF300006FCE0000751G2000000B7000002F3000008E10000CGC8500098DF70"
    "002CCC92009FCDG500C808A001G33F200130C7000004D000000D9000003F30000039E70003FB8F2004G52G70004FDG70"
    "0006GG10002F8G70004G4F70000AFA00007D20000BFCD0000C70G4000440E8000000E7000004G30000CGGC90009C8AE0"
    "004FC20002F7BA0004G00F1006A00A800880068005C00B8002G78G20006FG800007A0000009G0000006G5000009G9000"
    "0006E1000002G4000014EC41007GGGG5007F600004G9E30002E0D6000020BA000000D6000005F700009GGGF0006F7461"
    "000BC100008G9400003400000102820005GGGE2002G93D7000BE7G90001AEA20003AD70001EDFE0000F5E900000AG500"
    "0007EG3004502G400AGA8G30005CE800003ED00002G9G20004C3G000029FGA10000B8G6000600C8000EA5G70003DGB10"
    "000ACFGD006F64E900A603E201E10C6000305D000001D3000006D000000E6000004DE20000FABA0003F2C6000038G700"
    "00049G2000A30D6000G57G30007DD800005E900001GDG00002DAE000004GG70000245G4000000E7000B88G40008DFA00"
    "00058000001FA500009BAA0002F2E60008D5ED400BGGGE300003G0000007A000000CF100004GD10001EF200004GFA700"
    "07GGCG6003GD0GC000BGDGC00019DC40002FD30000CG940003G9000003GEC50008GGGG0005GF6G9001DEDG30003CEA00"
    "002CG600005GC40000FE000002GE880004GGDF8004GB1CC000BGCEF00018CC6000049000000CB000004DG40000C6E400"
    "04G9FD3004CCGE600000G4000002G30000AGD50007D5EC0009A0DE0004FDGF3000263C8000000C8000C65F40009DG800"
    "0002GF300008GG40009GGE0007GGGC000008GC000007GC000004GG700000DG70004CGGB200FD8B8102FDG80006GDDG20"
    "07B22G6000005F200096DA00007ED100003EA10002ECFE1006D03E8005C00B8004E00C7001E43G30008CCC00002FA300"
    "007EA70005GEGE0007B09E1004E7BG50009FFC800001189000EBAF90009DD900009DEFD000GDCC5004G0000008GGB100"
    "0178GC0000009D0000C8CA0000AGD30000AD200000CGA000007EG0000002G1000002G1000048F00000GGGDB0008E8BE1"
    "00176B1000DBFG7000D6BG40003FG700004FE70001E31D0002C23C00001A810000DE300004GFB00007C4G0000364G000"
    "0009C000001E700001EGAA2000BCEE60004FC10000CBDD1003C00E6008C00B8008C0088006D00B7004G7AF20007DC200"
    "003G900004FFG70008G37C0006G30D3008A00C8001F209B000DEAFC0003AGE300005G900001DG60000DGG40005FGG500"
    "000AG7000009G8000009GD000005E900001BCDE5007FBAG600A702G201G10C8002B04E100001E4000008E000000F7000"
    "0009E400006GC40001GB000002G7300004GEGA0003GFAG6000CG7D90001BGG90007DB00006GBG0000385G000003FG600"
    "00078G5006800B9000G66E60006FGA0000BB200003GG800006C880000056C000000B9000000F635000DGDF9001CCCC10"
    "0006G600000DGA00009GG60003GGG40005GGG6000009GA000008GF000004DB20006F8AC200AEACG1009A1D7000448C10"
    "0002F500000B8000003G0000007E0000000076000006F600001F5E3000C84G0005G9AG4001BCEE40000088000000B700"
    "0009E200002GC00000AG700000GGG80004GE8F3001F60BB000AF7CG00019FFA0006FB00006GDG000027D9000003GF500"
    "0003BG2000000G7000GBAG70005GF9000000C8000003GG00001DGB0003FGG8000037G8000004G8000004GE000000EF50"
    "009A200008GGA0000774G2000008G500000AGE2000002E7000BA4BC0008EGF60004AD30004GDG80005F0EB0003FFGG10"
    "00598E8000000C80009FAE70004CEB200007GG70000EGG4002DGGC0007GGGC00000AG800000BGD00000AGG200009GC20"
    "0046BE6004GGCG7006G21G3005G05E000020BA000002F4000008G0000007C0000006E800008GC80003GE300006GGGB10"
    "08GD4E5002G908C000AF6D900008EG900046B50002E72F0004800A2000E88D1000FAG70001A01A4000C20680006AB710"
    "00059000002EE200006EBC0003F3BA0008B0DA200AGGGF30004AF0000008900002DG40000CCCF0000527E000003FF700"
    "004CCG3000000F7003G89G6001BCE9000007GC00007GGC0003GGG80007GGG800000BGC000007GF000006GG500006FF20"
    "00076000001FG700008DF60003G3C71004E9FG8004CCGA200005G0000004E000003B600000AEG20003F1BB0004C02G20"
    "07C00C8004E01F8002FEFF10005DE50002GCCE7003G9884002GA400004GDG4000030CA0006309B000BB9G30003CF7000"
    "006EA00006GEG00005ABG0000009GC0000003G7004603G8005F9GD10009F80000006E100001GA00000DE100002GCA300"
    "05GFEG1003GC0F8000BG9G80000BFB10006CB00002GEEB0008F18G0003F5BG5000BGFE80004236C002GDAEC0008CDD50"
    "000BGC10005GAG4002FA081005G9100008GG900002GAG60000BGG7000018D0000004EE40001FGG2002DGGG0008GGGG00"
    "0278GG100004GG000004GG200004GF40002DGGGC009F89G700AA06E101G51G4000409D000004F100000EA000003F4000"
    "0188BFA004GGBC6004G4000001GF8000004AG6000000CC0006F9DA0001DGD4000002G400000AG600004GCF0002D89E00"
    "09GGGG600245EF000000FB000000D8000002E000000A9000001F8B0000C7C80005GCFE5008D9GD300000G4000000G600"
    "00255BF500CGEDG301E906B000G51D4000107B000002C200000AA000000F500001BD200008FF60000A96E00003A4A000"
    "000B7000002F300002DGDB2001CCCFB0003AE30008GBAD0007E01F2002G9GG1000CGFF2000CA0880009C47C0002BGG90"
    "01BC100008GC90000787C0000114E0000005B000000B900001EGGFA000DB8C800003FD10002FGG2000DA5F000062B800"
    "0006E200038G80003GGGG8001445D60000BFFG9004GE893004C0000006GF300003BBC0000002G00002C9G00000BG8000"
    "002888C200CGEEF100E90C6000A28B000002E30000098000000E4000003F0000003AE30004GDFB0008D1DG2006GEEE60"
    "00571B800181088002GB8E70005CE9100038BDE002DGDDD001G0000003GBA10003GEEA0000839B00007FEB00002CD200"
    "0000D300000BD400006E4G1002E36E0006GBCC00027EGE000000C8000000F300006A940000EAGG1004F19G0003GGG800"
    "00CEG50000C19C0000G6E900008C6100005FF70002GBGG8002G54G8001CGGA00007GG50000F9EA0000ECG800005EC100"
    "0005B000000AD000000GG600009CG50002G4G70009GEGG30038BG8100005D000002AGA0000E96GG000G65EB0005EEG60"
    "00001G3000314G3002FDBD10003CD400002CE40000FCBD0004G41E6004C008800690058003C10C80008C9G30000AD300"
    "005DD80000GBDG6001G52E90009GGF0000AGEE0005F40G6006E76G40007FGA00005DF60002G9GD0004E0AG2004FBFG10"
    "007A3D8000300C5000DB4G40007EGB10008B8A0003F8CG4003C03G2000BAFA00004GG60000794G0000CB5G00003A9300"
    "006FD20001FABE0002G31G4004C01E4004A00F3004C00F3001D9BG20004CE500007E2000002G6000002F9000002GC000"
    "002GG5000003DD00006CEGC5005GGGGF002DB00000BEB90000F76C0000859C000001E7000007G000001CC441001FGGG7"
    "0019F50000EB5B0004F14E000061D9000000AD10000008A000C944F0001AGFB1001E3000008E030001G4AC0007E2F500"
    "0DEBGG9008GGE400000F9000002G5000009EGD2000D8264000G2980003FFBE4005G60C2005703D000057D60000AG9000"
    "001EF400009GA50001GA000003GC500004GGG80001F74G4000BD4G90001CGG90009FG20000D9G4000026GGC000EGE870"
    "003E9000003G300000AG000000CB00000005FD20000C7B600009CF100018G40003F8D00007C0A70000CBA8000006DA00"
    "003BF80003EA5F2008A03G400891AG7001FG99700000058000465D70003GF8100009E60000AD4D2002E00A6004900680"
    "0580087002B10950006B4D30001BGC00006D0000008G2000006G3000003F6000000AA0000003F000007AEC51006GGGGC"
    "005GE20001DEG80009F3G5000AD3G300033BD000000DA000002GGGA0006GEC90003AF60004G94G2008E09A000147G200"
    "0002F70000001E1000C81B700068GF50003G400000CD250002G6AF1009F3GB700CGGFB50039G3000002G3000006E0000"
    "00DDDC4001G5594004D0210005EBGD2005F6098000300A8003E57F10019EF400000BG60000AGA00000G3000005E03000"
    "02GGDC1002F3087000880A70001BCF40005BGG5003FBAG400040AE00007FGGC0009GE410001E7000004G4000008G0000"
    "0009G600004F6F00008B9B00008GE20000BGD00006E2C90005GB5D400038DG90001CGE2000DB3G5004E00F6006C8DG50"
    "009C4A8000300B5000GE5F40003CGB10005FC40002F8BG4008906G4008802A8008700D5002E00G2000E8BA00004DE000"
    "008E1000007G3000006G6000006G9000002GE0000008G30000CCGGC4007GGGC5003DF10004FEFA000DD2D9000EA0F900"
    "0112G4000009F100002FGGG6002FGAC4002BC10002E998000AC0D6000652D200000A90000001A91000670C60001CGG50"
    "000B8000002G500000CA4A0006F2F8000AC4G7600AGFGE60038G9000000EB00001DEGF7004F3341004D5850006GC8E20"
    "00400C4000001E2002C3B90001BGD100002FF30000DF830005G6000008F5420008GGGE2004G71D8000BC1BD0001CGGA0"
    "004GGGC0004CBED000000F900028AG90007DGE500003G500000AF000003G9000002DE60000AD5G0000994E00004FF500"
    "005GE10000E6890000D71B50003BFGC0008CD10005C26D000B506C0007A4DF0001BC7C400000049000A503D0006CGDA0"
    "004FE40001E8AD1005D00G3006C00D3007C00E3001G00E3000ABCE00001BC300002AGB1000DDAG8004E18E1004FCF800"
    "0067E5000120C50008F6D400005BG30000DGGGD004G9854009F782000BGGEF1001304G4000008E0000B8G60001FGA000"
    "0098CD1003F854000692620006GE9D4002700780000007A000856E3000AEF500002DG80000BG620002G8000005G91000"
    "05GGD20001G68E0000BA1G50003FGG30008CGG4000F6A50004C2860008EE8D500370088000000C2000525C00007FF200"
    "002BD50001E98E0006D12G2007700C500790039002C004B000C64E70003DG900003AFE4002E79G8007C3EG0002EGDG00"
    "00000G0001300E0005F82G00004BGF000006FB20006D4D50007B0D30002FD70003DCG20008F19800007E8G100005CG20"
    "002AEA0001F99G1007909C000773FF0002FF7G1000120940005D4890001AFG600009G900003F5G00007C7C00001GG500"
    "002GE10003G89B0000CD4C800008EGE00009B000005E320000F21E3005D0D81008D3GE6006FGD3000009B000000B7000"
    "005E1000009G400000CG400000CG8000009GB0000008G2000038FDB8005GGGGA004AFG4000DE9G3000215F000034DE20"
    "05GGGG80049CE100005FA000006G4000003FGG60003E7F3000004E000029FGE0007GE62000088000002G2000005C0000"
    "001AFA0001DB8C000290D6000000G1000000EA10000019A000D702G0002BFGC000BDCC3005E4472007A1410008FECF20"
    "02700C4000001G300183AC0001CGC200002G5000004GA000005G7000008G900000FGE2000078EA0000CFEGE9002ADGA3"
    "001FB100009C8C0001F16G2002C01B6005A00B4002D00A3000D23D30001DGF10005GF40003FDDC0007E10G500C901BA0"
    "0AA007D006F008C001E76FB0005FGE30003BD10006GBD6001G80B4000440G0000005B00000089000000C9450001EDCF5"
    "002E800003EAG1000B82F0000981D0000136A00000097000000E9473001EGGD8009EGA0000A6CD000000DD5002CFGFE0"
    "02CG7010003F0000008E0000009B00000006E400004D2C0000860C00002C6E00001CG90000DB6B00009B27800005AFD0"
    "007DE10007F9D70005F388000010C5000001E000000A6000002F5440006GGDG60007D910007F8F5001F20A8004C00C70"
    "05900E3004E00B0001G88B00002BE50000AC0000008G1000009G100000CG500000DGA000001AF000007CGCC4007GGGGB"
    "003D700003F8E0000A81E00008B5D0000005C00000088000001CA752002EECE7003CG60000DGC40003G9000006D54000"
    "08E3G20004G4D70000BBBE00003CGF000019G60004EABA000CA0D6000674G50000007C10000008A0008D30E30008GGD3"
    "004CGE7002G607C000703D300001G60000009C0000200D5003G71C40003CGF200038CFG200CEADF000112E600028DG80"
    "009GGA500018C100000E8000002G50000006FC1004CGCG300FG64G300451FC000007GA1000324F7000CF8BE00018FGB0"
    "0007DA0000AD5D0007C088000663F1000002D90000000B70005912C00009FG90000CA000004G500000F72E1006G29GB0"
    "09E9GF6005GGG100002BD000000CD000000AG60000BE500003G2000008A0000006GEB30002E07D0000A91F200008GF10"
    "0009G600008GC50002G9000006G6200008GGG70002G77G40009D3E900008GG700008FA00008D610001G2000004B00000"
    "04GCC92001F109A000A94D30000BF500003F600001ED400004G5G70008G8G9500AGEGG9003BGB200004G8000005F4000"
    "0018EF5001E81E8007C07G8004ECC9800013098000000D6000CA4G000028G700003F5000005GA000006G700002CG9000"
    "08GFE0000063G6000068CFCA002DGGFB019CDB0003F4330005C7600005GED70001802C0000002E000062A60000BGD100"
    "000G600000BGGB0004GBDE0007C13D0004A00G0002E01G1000979E00001BF300006BD60007E67D000A707A0004DCFA00"
    "00140C0000000B1000820C00006EFC00009GGD2002F233000790140008C7DE7006G805800130096000341F00007GC700"
    "007FD00009GFG5000CG5F6000072D9000001G7000006G400001FGCF7005GECCB0006EA00003G7D20004G3E10000BG900"
    "005EG60003F41D4002EB55C00006AFF0009FD00005E7D2000CA1D0000476B000000A6000001F0000009B065000BGGGG3"
    "002BF20000C6B90004B07G0005601G6005400A7000A00A5000D26C00004GC100001CE30001DB9D0007B01G4008602F00"
    "04C00F0000F11F00007A7D00001DG700005D2000004G7000004G4000004G6000009GA000002BF10000ADGFG9003CGGB2"
    "006EGD0000999F000000E900002AGGC000DGC730003E6000006G200000AD00000006D800007G840003F2000006C40000"
    "04GDD30002F25E00009A2F000008FC000017C30004GCCA000E90B8000750F4000002E70000002D90005A40E50019FGG8"
    "00AF200007GG60000CDC9000089D7000000G5000006F100000GE4583008GGGG9006G4000004G9000007GC00000DGF000"
    "00DFG2000012F8000069EFD7005FGGF3004DEG30006BAG1000007E00009GGGC000FDG7200008C000002E6000008D1000"
    "002F600000AE050000D99G3006F6G30009DCFC8009GGE720017G7000002G7000002DG80001DGA70005G9000007G70000"
    "09GGD10005G6E90000DCEF00003CGB000006D70000AD6F0000C84C000001F300000AF20000015F2000EA25B00027DF80"
    "002F3000004G4000004G500000EG6000007F7000002A900000GGF9G5003FGF710006F60001BD8B0009D09A000893F300"
    "0005E30000305D20009C5A700006CF50005BD60004F87G3008704G1004B1AG4002FF8G4000000D6001G90C50004BGG20"
    "004F4000003G9000002GB000000GD000002GG2000005FA00004CEGDD002DGGF8004FGC000069CA000000A9000024FA40"
    "02FGGF70008D9000001G4000006D0000000BG600009GB20003GB000006GC400007GDFB0001F83G50009E5GA00009GGA0"
    "0007D800002G8F00004C8B00002GG300005GG20002G79B00009C1E600006FFC0001E9000008D371001G65G3007D0EB30"
    "0CD5GG900DGGF600003CE000000FA000003BF80004E8DE0008B3F6000119E0000000DA0000001D70009826B0004AEGA0"
    "005GE800004GG70000EGG80000EGG80000BGG50000AGG80000BGGE30006GGG30000F8000005F2D5000D92F2004E1AC20"
    "0AE8GGA00AGGF500002C8000000G5000004DE80003E31G3007900E6008400G4008600G0003B01E0000C46B00005GE100"
    "008CEC3000C5030000G2410004GECF400040088001000B5006E12F10008EG4000029D80001EB8E0009E0E6000024F000"
    "0006CC200000099000ED4AB0003AEF50000DF40000BG940001GE000005G7000005GGE40002F97F5000BD4CD0001DGGA0"
    "002BD40001D78F0006B05D000972EE0003EF8F1000000B5000B70A70004AFF30000BGA00009GA70003G8000009GD4000"
    "0AG8G70004G37G2000DD8G50001BGG10000DC000000EG100001FG100004GG300005FG9000000CF10001B9GB2000BGGGG"
    "004DGE0000DABF0000009B000016EG8000BGF850002BA000001E6000005G200000ACDG2004F6440005A0000005GGG900"
    "02B33C0000002D0000419A0000GGD100000CA000004G393000E76G2003F2AA000A91GCA00EBEGB1009GF9000000E8000"
    "000AC000004G533000F70DB007E17G8009D5FD100BGGG1000049G000000BF00000AGF00004E8G1000014G020003BGGD0"
    "00CGB720006G0000007F000000CB0000006F900009GEG1000EC3G40009B3G3000029G000000DB000004GC9A3008GGGGE"
    "0007CD10008B1A8000C21B7000AAE800017G900007G7E300007D5E000006FE2000AGG40009GBE8000D80E6000001G400"
    "0008D000001E700000CG9C6001EGGGE0001D700001F9F10009B0G00002A3E0000002B0000005B0000009A442001FGFDF"
    "00AAEGE000E8400000G06B5003GEAA9003E5098000006D000039D300008D10000059DG6000CC7G5000006G30003CFGE0"
    "007GF510000AA000002F5000006E0000004DC60004F5AG0004G1BG0001AGDG2000040F3000000C4000660980005CFG70"
    "03CCEF3004F4440005C0020005FCFF5005C6088000000A7001907E1002FGE300003F200000CC170002G49D0008B6G120"
    "0CACECB00BGGE710017G0000005G10000003ED30000C9880000C8B600007EB10018CF50006E04C00007C1F200003DF20"
    "0003CA00001E6F00000G6A00000EG200003EF30001G49900004D47800003ABF2003F6000009D169003G36F5007F1E950"
    "0AD9GF7007GGB400003G5000004G3000005EE82003F30D8005C02F8002F9EE8000130C5000000C4006F20E10017EC900"
    "004EE40000FAAD0005F02F6004D00E8006900C7003E10C5000C96F20003EE6000002DD00000CAG00007D8B00005GG400"
    "003GG40002E97D1001B839800005AFG0003DE40000DCEG0001G3EG4001E9GG6000284B9000220CA000EE4B900048BG90"
    "0004CF40003E4A80004C5E20004GE30001CFD00006D1C60000AD5E100004AG80007GF40000EG9F2001FC198004G007A0"
    "07D00AB007C02F6003FCEE1000AGE400005A8800000GGF20007GGD0000AGG400009GG00000AGG000008GF000002B9000"
    "02BGF2000CGFG4000232G400000AE000004G500000CC3B9000GGGG6000EFC500003CGE0003FGFE0003C1F8000009G800"
    "000AGG8000025D80002BBF50003GG9000000F700000AG600008FE40006F2F21009GGGGB005ACG8100001F0000001F000"
    "006DFGB000AB885002D0000004B7850007GEAE2001712C300058E600008C5000000D3000008D100000C5000001D00000"
    "01C6B93001FGC8B0009D26G2000BGE70004AGG7003GDBG200130A9000058EFD000FGEC80003C7000000F4000003E1000"
    "004BF20002G9890004F05G3000BBG900004GF10000D96C1000F30950005DDC500003DGB0004FB8G302F96DF304GGGGB0"
    "00786G2000006E000000E9000003G4000078C60001EBCF0003F00A500490084008800D0007909B0002EAE500009F6000"
    "007GD50000DGG50001GGG30001EGF00001GGF10000EGG400006GG700004ED600006FF10004GDG4000AB2G200011AE000"
    "001E6000006E1C9000BFEG90008GC500004EG50004GGG8000CC0F8000215GD100001BFB000000BC0002DCG70003GF800"
    "0001F500000CG000007GG30005G8G8300BGCGGC00BGFG7200142G0000002E00001ACFB0008GD940005F1000008A00000"
    "02EG70000014D7000006BB00009GE200001C2000006D000000B8000001F1000002F2ED4002FGA5E0009D49E0000ADC30"
    "002BGGG4005B88G100000E60002ADGD000CGG9200025E000000B9000000G6000005CG70005E49F5004D6E62001EG2000"
    "03FC900005C0A70003F42F00005EE70000017FB0000B83D000A62CB001GCGG7002GE7C2000003B000000790000009600"
    "005FE30000DF9F2004GC0A6008G908A007F50CB007D05G6000GCFD10006GC200004GF400008GG40000CGD00002GGA000"
    "03GG800002GGC000009GG400003CEB00008FC10008D8C600042086000001D20000097000005D044000AC9FB0009G9710"
    "006DG80005GFEC0009C2F8000009C000000FGD3000039FB00018EG80007GE60000006F200005GG20004GCG0004F67D00"
    "0BFFGG9009DCDE30000098000000880001DGGB1008GGDB100BD100000AD2000002EF60000008G6000069F90000DGF300"
    "001A0000007C000000C7000000E3000000F9CA2000GD88B000DA49F0003AF9200004BFGC002GC9BC001200E50007CEF0"
    "003GGF200001B8000002F1000005A000003DE40000F87B0000G00B3000A6EE10005GE10000CA8C0000E30980004EFC40"
    "00017EE0003F71E002GA5E8004FGCG5000531F0000004C0000007A0000007C00003C8300007GDD1000D8094000G20660"
    "04C00A3003C00D2000C4CA00005GD20000008EA0000979C000980C9004G8CG2005GGAF0000405B00000089000000AA00"
    "002FFGB0008GB30000D9000005G39B300AFFGGB006GA7G500034F800004F700000DGGG8002GD841007G100000BFC5000"
    "05GGG3000006G200003F900000BE0000004F4000009G200000GA000006G300000AFBGD4007GGBEE002GB5FC0003GGE30"
    "00FCB62004GFCCA007E100000AC3100008GGE2000188G800001BF20000DG6000005GC20000DEFB0006F12G4006E00980"
    "08A00D8004D01E8000EEFF30005CD8000001CGE0003EDFD004GFDG4003GGGG300077EE000000CB000000DA000000DC00"
    "006ED40004GBAF0009B0CB0007B8G30000DGA00000DDC90000C80F10005GGB0000008F90001C82B000AB0B8005GEFF30"
    "02CA4E00000069000000960000009600004CG60004GA5G4008D05F5006C7F30000CGC10000BA9B0000C60D30006DD800"
    "0004FB00002FGD0000DDBA0007E3EC6008GGGF800189G4000003G0000003E000000EGFB0002GGGA0004GGG4000CGGC00"
    "00CGG60000EGG60000BGF200001FF1000004DGF2002FDDG6007703G4000448E000EGGG6000B9AC000000D3000004A000"
    "00039GG2004GDBG1003506D000027E90004GGF300098BC000000C4000002F1000019FF1000DE8C4005B12D100140B600"
    "0000FE1000003D600004AG20000CD400008CGG9004GGD9200BE4000007FA100000CGD1000004G400005AG300009GA000"
    "001AFB70005GGGB0006GGG6000CGGC0002GGG60002CGC000009GG700003CG200001DC100009GGC0000E60D3006A00A60"
    "07D0098003G13E7000BGGG10000BG600004GG40000AFCE0002B00960056004500490074004A02E0000EFG800004DA000"
    "006GG70008GDAG0006906F000000D9000006G100001F8350008GBG90005GG700006FF30005GDF80008D0D8000003G300"
    "000BC000003G5980008FFF30005GC100001BGG70007D8G5000011G400027DGF001FGGC300184G2000009B000001E4000"
    "002CGA0003FA7G400980BA0003FBE10000AG900000E7D40000976A00001CG500003CGG3002GGBG4008E2AG100553G400"
    "000BC000003G5230003GCF60000FG8000009F600005FGF0000FF4G3002E50C8006D01E6001AEFG30003GGE100009D500"
    "0038BB10003GGC00002FGC00000GG700001FGA00001GG600003GG500002FG600001DGA0001DF8G3008F34F000130C800"
    "0004E100000B8040001G8D90000EGB00002E1000008C000000C5000002E0000000A0672004CDFEC000DC2BE0003DGD10"
    "006EGG2005GDBG000072FC000007GD1000006FA000000F90003B8G60007GG800017DGB000BGDFG000382G9000008G400"
    "0005GG5000003EB00038EG80007GC7000016CG9000AFAD9000210E200006CGF0005GGE700036F00000079000000B2000"
    "004DGB0009G9AF000540CB000005GC1000019F80000008C000168G80005GF91001BFG90003GAAG100021EB00000EG700"
    "000DGG5000002G800068DF5000FGC5000006F100003G9F3001F75F0009G4BEA009GGGG900024G2000006E0000007A000"
    "002E100000BC100001F4000005D0000007CCGD2004GC66B000E905D0003BFE10001A0000004F000000AB000000D93200"
    "00DGGF4000DD64C0009B59F2002CGC6000970000009B000000F4000002G1000005G8E90005GF89A003G207B0007EGC10"
    "0001B700000BG500009FF70005G3G4000AD9GE8003FGGD600000G3000000E20000017CE1001D84D000AG9FB001GFFG30"
    "00B93E00000059000000780000008600000AC810005GGG0000AGG90002FGD20004GG800001FG7000009GB1000006C600"
    "006GGGA000DF960006G400000CF4200008GGGF1000689G400013DF10007GF3000009D300008FCF2000C80F4003D00A70"
    "08900D7002G47G5000EEGF10001CE40000008D30000CBB5000B88G0002GGGF0002GB7A00000087000000A80000009700"
    "002GFF80007GFC7003F8100009F4420005GGGF2000568G300001EA00002GD100009GG90005GEFG1002B1AF000001F800"
    "0008F100006G7870009GFE20009GD100003CB40004FDCG0009E00C2000DB7F30000FG700005GAE2000BD0880002CGG70"
    "004EG50004GGG8000AF9G400012DE000002G6000007G0570008GDG60002FG600004CD50000EGGG4006D21B8006B00880"
    "04G00A8004G48G3000GGGC00004FE300003B710000AFEE0002GA1C4002G3048005C0068001C00B9000F9EF10004FF400"
    "000AGB10000FGF20001DGE00001FGC00000EG800000DG500001EG1000008F1000007EG50007GCG8000421G40003CCG80"
    "00CGGF500055D6000002E00000098000001D1000007F100001E6000000G3010001G6FF5001GE43C0007709C0000BG920"
    "015CGE2008GGGG300692CC000005G8000001DG9000001EA0001BFF50006GC50002CGC00007GDG3000035G000003F7000"
    "00BD000006D1000006GB8B5000FGGF30005FDC4000BGGE0000GGG80004GGF30002GG800000GF300000AG4000008F3000"
    "0006DGG9006GEBGA002304F40029CGD002FGGG300493AA000001G200000790000002E200001DF60000CFCB0005G4F600"
    "0CF8GGB006GGG8200026G0000002E00000083000002G8000009F100000CA000000E7000000AFGGE1004G14F60005EFA0"
    "0069B9000DGFFF000452F6000003F60000006F60000005C00005DG90003DC71001BGFC3001DGGC0002GGG80000GGG200"
    "08GGE00007GG900001DGD100008GC000007FC00003F8E2000052B000001B8200008GGF4000142C600024DC00005D9100"
    "00005FA00008BF70006DAG7003GECF4001B81E2000003D0000006A0000009400005CC81000AGGF0000BGG80004GGG400"
    "03GGA00000DGG30000DGG000002AC0000007EG6000AGCF9000832G700018DGE002DGGC1006C6G3000005D00000096000"
    "003B0000009D000000F4000002F0100004FEGD2003GB37C000D638E0004EGE70004EE00005GGG51009D0DG2003GDF500"
    "007GD00000ADE70000ABAF00004DB300000C8000006G3C4001G58E0009F0DA200AFCGG9006GGF910000E5000000F0000"
    "006EB00003G9G0000375C000001E8200002GGG4000000B800004AF20005GC4000004B950005GGG5000BGG90004GGG400"
    "01EG900004FG6000009G800000075000001E881000AD8G1002G4AB0007F6EGD003GGF920003B9000000C4000000C0000"
    "002AF10003GGDD0005GC1C1007D5075002E007A000C20C70009CCG40000AG60000AGGD0004GFC40008G4000004GB6100"
    "008GGD2000017EC00006DGA000CGE60001AGG8000AGDGC000133G900000DE100002GGC300005BGB00027EG6000BGD500"
    "0006B000000FA000007F200000G6000003G7550002GD9DB0008D75F30005BDC200005BE1000AD8F200B949C005GGGG60"
    "00FGDG3000231F0000005500000060000005B000001E9000004E100000A8000000D8462000BGDCD000CE45G20018GD91"
    "002CC810002FGG80005GGE30008GGA0003FGD00002EG900000BG9000001950000019FC50008GGGD000311EA0003ADGF0"
    "02GGGF300382D6000005D000000B500000BGGGG205GGEA4005G5000001FA0000006G80000009E0000005G30000AGD100"
    "0009D000003F6C0001C85E0006E0C7000E62G9500GDDGF401FGGC200033D4000000A60AE007F27E100F91FC204GABGC1"
    "02GGG900005CA000000D5000000F30000008EF70004GCFE000110BC000246EF004GGGG5008C7EC000004G300000B7000"
    "007FF50006GCGC000170GA00000AF000001G700000AD151000CCDF3000AGD3000008F91000BECF8000F56E2000EEF100"
    "01DG600006G9D00002DFG4000019F200009GG80005GFEG000493DC000008F100002G700000BE143000GEFG40009GF500"
    "018GG30006GCG4000170G4000007F000000E900000AE145000DCBF3000CGC300008EGG1006GG83000EE100000AF40000"
    "03FG60000018F200002DF00000AG4000004FGB0000799G0000004D000019FGA000DFG8200037D000001D4000006B0000"
    "00018DE2002D94E400D909E104GEEG6001BA7E00000088000000B5000000B30003AGGG200EGE93000GC000000CE00000"
    "06G30000009G3000004ED00002FG80000005B060003F76G100D91D7006F26F000EA0EC300EGGGE3005BED20000079000"
    "004CG80005GBAG4008D01D4003GDFD30009GG70000E75F6000AC7DA0003DDA10004F700001DCG22007B0BC100486D300"
    "03GF100002GE600003GAE3000029C300000B53B0007E2C9002F63G5007G8DGD007GGG710004AD000000C6000000C0000"
    "00019G90001BDEC101FD4GG302GGGFC000784E5000005E00000089000000C600002CF30000FFDF0002E31C3004800880"
    "07A0095001D53F20007GEF00000AE400003DF50001FDAF0002G3290000CDE70000AG900001G49B1000F30880003CFC70"
    "0003CGF1003G9AG000ED7FA002GGGG2002C9D8000000F5000003G1000003E100004BF70002FE9F1008F16G5006EDF600"
    "01GG600004FBF10001C37900004EG600007BF90000FF4B4003B502A007800380068004800580085001C21D00005GE300"
    "004EB000002GG300000EG500000GG300001FG200002FD000004GB000005GE10002FGC00008B8G0000317D000000A8000"
    "000F5000007F000000EB652001GGGG9001DGC1000195G10000095000009A0000008FGB1000002C7000246F3000EGB500"
    "000CC000005G400001EB000006G320000DC8C0000FGFGD40049EG700000BD00002DGGGF208GC841005GD1000008G8000"
    "000AG0000009G000003DC00002GG6000001E900000EF300001GA000005EDFA0008G23E5005G40C6000AD2E60002CGB10"
    "005FGE1000BD9G5000005G2000009B00007DFC10007EEC40000E3000007A0000003D800004GGE0000BB9A00008EF9000"
    "007GF500004G3D90005F4DB0001FF820005BD30000GDF90004G0DD0001BGFF3000000C70000006C0006429B0006DGG60"
    "006GG80002G89G3008G1099009C008C00AC008A008D0098002G86F30008GF800004CD300007EG900000CG8000006G600"
    "0009G600000CG300000DG300000FGB0003FE50000EEEF0000816G2000009G200001EB000009G201004GF89F003GGGF50"
    "01CGD20005E6DC000003F700002G8000001CGB1000005F7000604E7000GGF8100008F500003GD10000CG200005G79400"
    "0EGDGE3008EGGE200009G300000BE000018GGGA008GE851009G2000002GF2000003F4000013C400005EF400001DC0000"
    "007F000000FF000003GC410006GGGG5008G71F8007G00G4002G7AC00004FD300007GG50001FBEB000000C8000038EC50"
    "00EGGA500028E000001F8000008E10000002F5000024AC0003FEA80008F1B400018FG0000006GC100004EF400002EB00"
    "0015CD0000BDFG1002E0AC4005DC3C0000560C4000000F2000450G300004ED00002DF80000AEAB8000G1009003D00080"
    "04C0018005C00A0000F87A00004EE100001BF800000FG800000DGA00000GG600002GG600005GG500005GF100002FF300"
    "03GF600005EEG0000006E000000DB000005G300001EA000009G88A5004GGGE3002BEA10006C8FA000000AB000008E200"
    "0007GF1000002D8002512C7001CGGA00000D9000006G200000C9020007F15F100EA4BC302GGGGD20034BE000000F4000"
    "02CDGG400BGD74100DE0000001FC0000006G3000000D7000035G700003DF0000000BD500003GD30000AG200004GGD700"
    "04GB8G2000F80F60009E4F40001AGB10008GGB000048DE000000D800003CG820006GGG90000E8200003G100000BC0000"
    "0008E900009FGF0004F58E0008E1E70001FDC00000DGD00000CAF700002AG500002AG60000AGGE0000FAGG2000CGCD80"
    "00171AB0055008C003FA2BC0003AGGA0001DC50000BG4D2002G4085007C0088006C0058003G0087001F86F30002DF600"
    "002AAB0000A99G0000E06F0000BE9G1000000D3000000C300A950F10002EGD0000DA887004GGGGF200AG5000000DC000"
    "0006F0000008F000016AC00001DG5000006FGFB001FE887004G5000007G8000001BG8000000FB000000EB000009G5000"
    "006D000000FC000000G6000003GEB50005GCBG6006G92G9000DE8G80004FGD2001CGGGC009GD685008GF3000004EB000"
    "000CC000000CD000003FB00000CD2000002AF70000EF7F2004G30B4004E0078007C0067004G10C4001ECAG10001ED500"
    "0034A00003F8E3000870A60003B8FB0000173D3000000690009610G00003BGG3002CE80000DDFC0005F2A60002EDE100"
    "000BFD10001F3E70006D1G40001CGB00003EG90000DA6G7005G32E6000AGGG4000000C5000000D4003B25F00004CGA00"
    "002AE90002EBCG0004G10F0002DC7D000018GC000004EF40000D7E40000EFA000003F500001FB00000AF230005G46G10"
    "0AF49G200CGGGD200147G4000004F000004AB40001BGGE0004GGGC0004GGG70004GGG80004GGG70003FGGC00005CCC10"
    "00DGF20005E5F7000020C7000059G700008GGGA0002G3000008D000000F70000003FGF10009B9G3000103G3000009E00"
    "004FFG60002CF710000D8000004E100001BGD40001F7EE1000006F10001AF600005FE70000105G3005B11G4000AFGA10"
    "009GGGA004GE8BB00BG7000005FG6000001EF0000008G000009DE00000CG7000005EC50000DGG90000BGG90000BGG700"
    "00AGG20000DGF00000EGD000007DG800006F900000BGGD0000AGGG7001G80B8007E10A8008C00D4005G89D00006CD500"
    "002DF710007GFGA000EGAAA002G3088005D0098006D00C3002G69A00003EE10000CGC00003GCG3000184G3000007G100"
    "000AC000004G200000BF882000CGGC1003FF200007GG6000019G6000006G100000AC000003F8000008GDFF5004GGGD30"
    "00AG500001AEC0000009B000002BD30000BGGG70003G4510007D000000D600000009DA10009C4F5000G40C4003F93E10"
    "0029GA000004EF20000A8E30000AGC0003FGE10002CDG4000006G300001FA000006G400002FA000004GB8B3003GGGC30"
    "007FE80001F75E5000F80A7003G60C8005G20C8004G31G4005GAEC00008FF20000EA000000FD00000BGG200003AG5000"
    "000EA000000AE000009EGB6000CGGGG901CG500007FEB00008DAC000001CC000000E9000004G840000DGGG9002GDB930"
    "000DD300004G8000009G100000DG500002GGE81004GG6G90008GBGA0001EGD10018EF20002D9E8000000C900002DD000"
    "003FG6000110CE0005D56G10019CD90000FGD60000CCED000000B900001BF200008GGC1001849G3005E7AF1002CGE600"
    "00AGG8000058DD0000009D000002DC00002FGG70000DD510001E5000009D1000007GGGA000AA5CG200007F60001DGD00"
    "0007CG6000002G600029BE10005GF500008GGG3000688FA000007G50001AG900000FGC000001DG500078BG20006GGB00"
    "0008F200002GA00000ED6B0006G3DD200EG8FGA00CGGGB100016G300000AE0000008D200009GD30001FE100002GB4100"
    "03GGEF2002GD1G90009F9G700008GD200087000000BC000000F9000007GG940005GEBG5002GG0C8000FF1F60007EGD10"
    "001D3000007E200000DD850002FFCF5007G40C8002F70C60005F5F50000DG900000AA000006G600001EA000007G3B700"
    "0CG8G9100AGGGG60000AG000000AB0000017DA0002DEEG4004G5CG20006BCG5000000F8001100DB000C84D800007FGA0"
    "005CA400005GGG30000GGG00003GGD00004GGC00008GG80000AGG700008CC400007D860000GFGEA004GD100001AG9000"
    "0005D0000005F000008B8000009G3000002GF50000AGEF0000FA0G7004G10C5004F00C5005G60G0000ED8F00003EG600"
    "007D410001FDFB0007G1DG4003GCGG70004B5G8000002G5000C69E10006DG50002DDB9000AGGGFA00BG9000003FG8000"
    "002BE0000008G000001BB00001GF400005GF500002CFG000000EE200002G900000BG200004G800000DGB883006GGGG70"
    "00BEA10000GFED0001E83G20007GDG20000CG900001EGC0000AGFG00007EFB0004GF100006EG4000000G8000003G6000"
    "006G100000DB000003GGCA5003GGGG80004CE50000BGGG3003GE2G7008G70G6004G43G4004G5AE0000EGGA00004EE200"
    "0099400000FFEC0003A10C50058008600880088005800A6004D46D00006GE30001DDA00001DGF00000CGG00000GGC000"
    "00FGD10000FGB00000GGG50000EGF810002FF40000BAE9000010B9000003F400001GGE600008D61000097000001F2000"
    "002G8000008G600000FA000004G2000008GGGE2008G74G8001G96G40003CGC00006CGA0004F8CE000000D8000006E100"
    "0005F80000002F5000145F80005GE910009GGD1000CDEG7000006G400000DE10001AG600007G800002FGC700009EGG20"
    "002EF400002GGB00002GGA00005GG70000EGE20004GG800003FG8000005FD200005GGG9000164CE000000F900046BG10"
    "00FGGG90002AB010002F300000BA00000001F400001DE100009F577004G61G800EF06G200BGDEG400058FE100000FC00"
    "002DC000008G700000DG400004GGGB0003GA3F8000G80DA000CF1F90002BGG2001BE910003G8G4000003G300001ED000"
    "0007EA0000003G4001318G4003AGG800000CG900002GG600003GG200008GC000006GG00000AGF100009GB000008GA000"
    "00AGG4000098DA000004F600000DG7000005DG1000000G4000735G2000BGGA000019DB0000ABCG1000F4CG1000CGBF10"
    "00000E0000003E0004C8AB000029G600004GF700006GG600005GG400007GF00000BGE000006GE000006GG500002CG300"
    "006GF200007DG4000001G300001AG610009GGG80001G8400005D000000B70000000B7000008F700000D8000000GE8100"
    "05GAAE1002F30C7000AD1AB0000AGF50002DF10001EDF40005E2F00006E8D000007GC100001FAD10004D4D60000BGE10"
    "0006E000004G600000EA120006G4CA000EB0G8004GGGGA001BCCG5000008G400007FF20000D6C6000000F200000DA000"
    "0008FC0003702F1002F66G10004FG700004EB300001FG600000GG900001EG300006GG200008GF000007GB000006FE400"
    "0001D200000CE000006E000001E5000009C0C7000CE6GE1006GGG5000003E000007D840001FB9F2004G6087004A00780"
    "04A0088005C00C5003F59E20008EC30000DFBCB004GFGD9103G9000000CG9000000CE1000117G20008CBG30001DGC000"
    "006CDC0000EC7G100066E900000EB1000005G50000006E1000A83G10004EGC000007D200000EE200005G400001BG4000"
    "05GGFC00009G1D70004G6F500006EE10002ED80000CDCD0000B66G40005GFG8000024B8000000B9002D71BA0002AFG20"
    "001C800000BF500002G5000005G0000005C8EE3004GG9C8000D80B80001EGB100018A830001GGG80000EGG30001GGF00"
    "006GGA0000AGF400008GE0000018810000CGE400008EGA000000ED000000DA0002FGGD30018CFC40002F800000CD0000"
    "01FGGG5007GGC9100DG3000005GB000000AG6000001FB000014EC00003FG60000008F000003F300000CA010004G4BB00"
    "0BF2EA100DGGGD10004CC000000B90000005F400001FB00000CE200005G77A000CGGGC000BCEGE100000G9000004G600"
    "005GG7000069DB000000AC000016D800008GGF60001BE820000D7000004G200005GC100005EF8000000EA000002G7000"
    "007G300002EA00000BG9883008GGGG400018EE2001DGGG5007GAAG4003GEFC00003CGA000009GG30000FGG40000BGC20"
    "004CGG4000974EC000000BE000003G600001D600001C8000006G9500003CD90000AFD10004G7D70002B0C6000004E000"
    "001F6000009C000004G77D3000AGC30001DGGGC106GECB5002FF5000008EF1000003G6000003G500007AG40000FGA000"
    "006GG70000DCFA000036D900008GGF600019E850000B9000004G300000AA0000002ADC3000BD8G7000C99G80006ADE50"
    "00000C8008100F2004E94G00002CGE0001CCFG7007GGD6100CG3000003EF1000001G7000000F8000057G700003FG5000"
    "0009E100002G800000CE100005G421000CD1E8101GGGGF30058BF100000AG300001BEF3001DGCG8008G46G5005FBDE00"
    "002CGD00000DGG60000GGG70000BDC10006EG50002GGG70002FGF200006GF70000EA6G3001G30G7000ABBF30003EG600"
    "0004F600000DD100007G200004F805000BE16G501GECGG300ACAGA000006G2000019FB3000C91B6000D76G80004ACF40"
    "00000C6008700F5001CA4G30000DG800000EC20000068E10009B0D5002G8088005D0087006D00B4000CA6E00001BE700"
    "000AD50003EGCF000AG8BG0008E5E900007EG500000BGG10000EGG40000BGB00004BCE0000FCEG4000G9GD30005CBC70"
    "0000088000000A7006D40E40007DGE1000287000006FG20006FBG40005GAG10002FGD000002GC930004E0CE1001CA700"
    "00AF100000BG100001GG1000008G5000000EA000000AE000005BF64100AGGGGA01FGA00004G9G40002C5G3000006G300"
    "001FD000008G400002GD443002DGGGG2006DC2000077AC000001C9000007G70000005E10017007B001G409B0005DCG30"
    "0004F200001G9000009F1B9003E80EA00AGCCG800DGEFG500000FD000004G90000ECCD3000G8861000E7500000FFG200"
    "00D3680000003D0000548C1001FFB300001AA00001DA100004E0000006C0000008B5AB1005GD6A8000A907B0001CGE20"
    "003E864000BGGGF103G32F6005809E000079FD4000AGGF30000D7000006F2000007FE60005G5AG4006F2AE1001DGE100"
    "00ADF80000F23F6000F38F60006GB400007E900001G5A70000D23D00005FGG1000005A70000002E0004200E3005FGGC1"
    "003DD30000E87F1003G0096006D004800490048001D0058000E70B40003FGE0000G8000002GD000002GG6000008GA000"
    "000EC000000AG200005CGB8300CGGGG904GF100008EG4000058G4000000C8000001F7000005G369003FF8DF004FGGG70"
    "009GA1000083G4000005E200002GF70000003F2004600D7006D15G3000AGF5000002E500000DF000003G39C001E80FD0"
    "0BGA8GA03GGGGF300002GC000004G70001CDD00004B6300007B8610005FCDC0000000D400000088002A87F3001DGC500"
    "001D0000007A000001G2000004D0000007C4B91004GF8C7002EA3D70002DG810006GGC3000DCAG2001G3AB000171G300"
    "0007F41000AGGG40002G8300006G3000007DB10006ECE90005E3A900008FE200001EG60000993F4000C51B80007GG910"
    "007EA00007F49B0009D07G0003FGGG3000044C80000004C000B507D0005DGE60006ED30000EA7D0004D00C3005B00760"
    "04B0048002C0066000C82E20004FG90000BC000000DG000003FG40000DFG6000033FA000000BG000002AG630007GGGG5"
    "02DGA0000CF9G2000A81G6000112G600000AF200002F900002FG986001DGGGG302DGF10007DAG4000008G200008GGA00"
    "0014AG8000000G9002C66G6001FGG9100002F700000BF250005G66G002GA4DD00DGGGGA00644BG400000EE000003G700"
    "009CE20000C6400000C13000009GGC0000440C60000004C000974AB0009EGE50003F100000C8000003D0000004C00000"
    "05ABGE1002GA47A000F82C80003CG800003EDCE000BECF9000G53G200191AC000007GE60004GGB10000F5000006D0000"
    "00AEA10004E6D70006C0770001GAF100005GF30000D66F5003F04C7000CGF80001AFF30006D4AC0004B07F0002EGGE20"
    "00143A60000002C0003302D000AGGGB0003F900000E8B50003G31E2005C00C4002C0068002E00C5000C85F00001DE500"
    "009FE80006G42G3005G55G40009GGG40000009800000088002A21C6001DEEB1001ACCB0007E8860007B7300008GDD800"
    "01301E50000004C000B30AC000AGGE4000ACCF4000G8853004F8600006FCE80000102G0000000E3000B48F3000AGF500"
    "001BF00000BF500003F1000005C0000008FFGE3002GB27C000EB49D0002BGF6003CCE40001D4400004E4300005DCEA00"
    "00000B60000004800062088002DGGG20006EB10000F56F0004G0093008900480078004800480094001D23E00005EF400"
    "006EF70003F62E3004D01G4000AB9G600018AE50000008B001C50AB0007DGG40007EF40007F49C0006F14E00009DE700"
    "002GG40000E73F4000G30D80007GGA10007DA10001F39A0003G4DB00006CCG0000000C50000005B001B207B0007DGF40"
    "001BF60002FAGF0001E56B00005EE300001EG60000A86F1000994G30001FF60000078000000F2031008A02G201F439C0"
    "08GGGG6001439E000000F3000009A000003F4000000FB000000FG200000EG8000007DE0000004G400039DGC5003FGGGG"
    "007GEDA000ACAG4000F58D000171G30002BDGC6004CFEB20003G3000009D0000000FGGC4004E0AC000871F4000008C00"
    "0018EC30006DGD20000AA000002G200001AGF10003FAG400001BF00000CGF3000001BF1008303G700DF68G6000CGG700"
    "03GGG20004EA500006GGA30004FCED0000201F80000008D003GA79G003DFGG8000A90000008G2000008G6000005GD100"
    "0015E60000008B00008C9G64007GGGGE03FG70000CDBG0000C54G0000003G4000006G300000BG00001CGE85002DGGGG2"
    "007GGG8000ACAG2000D67D0000A1D500009AG83001CFGG50001G2300009E0000007EC10007E58A0008B17A00019GF400"
    "001EEC00007B0C7000B50B80004EGC1001DG700005GCF3000096F9000000EA000000EB000008G410009GG6G5008CDGGB"
    "003C900000CCBD0002F20C5004800680087004800770097003D47G20006GF50000860000006E0000006G300000AG9000"
    "0016G2000000D7000048EE84009GGGGD00BG700001GBF00002G5G4000022G3000005G0000009E000009GE76000DEEGG6"
    "002C900000CA100004E00000089000000895B80004GE6C5000D70A80003EGG50008FB10000A4A6000001D600000FG200"
    "00048F100110097004D53A80007EGF20008CD50004D49B000006D400000AF40000004F2007800C7008913G3000AGG600"
    "004FGGG100AD8F8000E53G200010CB000025G91000FGGE30001F9000007E2000001EG800002A5E0000027F000006GA00"
    "00003E4000D004C000D648D0000CGF60007GC10000GBG8000039G600000DGF1000125E8005E009F004G76DE0007GGG40"
    "0000A000000A8080004D22E002EC78A009GGGG7000005F1000008C000000G8000019D10001CE500002G5000005F03000"
    "03GGGF3002GB19B000BD6CB00006GF20002EA00000CA000002F2000007C1460007GGFF8000GD04C000AC48F0002BGF50"
    "001BA00000DA000003D0000005B0000005ECC70000GC5BA000AB4AC0001CGC300003G200000AD380001G59G002CE5F90"
    "0CGGGG700556EG000001DC000003G400005FE30002E74D0002F55G10007FGG30000137A0000002E0008942G1004BDGB0"
    "005F2000001G8000000EC000002GG3000029E60000006D00002ACG44004FGGGG00CCEF1001FB650006FC400006B8D600"
    "00001D000000093002616E3001BGD800008EB20006G76D1008B00A40078005700840078002A007A000E34F30005GG700"
    "008GB10000E2590000E15C00006GGE1000037A70000004C0006102E0009GGGC000C9981002F8882008C8500008F9E900"
    "02101E30000006B001845E9001BGC70001EGC00005G9G60003B0E9000000AA000000EA00000AG50002FGE8C200BGGGF5"
    "005CGF2006F9AF4003E31E4000AGFD10006FFA0000F32F3000G81E40004FGB2000DGB00002GBG40000E9F9000002G800"
    "0004G4000009G100009GF8B5009CDGGB00AAC70000FD5C5004D40280084003800840075006600B2001D33C00007FG700"
    "00A7300001FCE60005C02D0004C0047008500480058005A000E34E60007GGA00008B0000007G3000006GA00000AGF100"
    "0002G2000000F900006CGF85004FGGGG003GCC7000CDDG6000206E000014DA10009GGG80004CC710000E6000004G2000"
    "001C900000BA200004E000000590000008ABGE1002GA37B000D818C0002CGF50003FGC00006G6E6000031F600001EG30"
    "0582DG3005G009D001FB8CG1003EGG9003FF300008ECA00005B6E0000007E000000AC000000F900001BGC85005GGGGG0"
    "00BA000000DF000000CG500001FG5000003DA000000AE000005BG95100CGGGGC0004F200000DD000003G60A100CC17F1"
    "05G30EA02GD88G308GGGGD000007G6000006E300005F710000AA000000C5000000EGGB2002GD38C0008F54G20004EGD0"
    "006ED30000C23E0000008D00000CG30000008D10017007B003D207D0005EEF6000AD1000007G5000006G6000006GD000"
    "0006G2000003G800007BGE94006FDEGF002FG900003DBG000002DC000009GB0003316F800BD00AC003GC7G80003FGA00"
    "003DD30000C73D0000G05C0000ADEG2000176D40014005B002E629B0004AGG40002D1000000F6000000FA000000DG100"
    "0006F6000000C900005CEG92002CCCD8004FECB0007FDGA000A76G200071CC000058GC1004GGGE20000F9100005F2000"
    "0005CC00005G610000F5000005D2740007FGDF3003G901C000AC26D00008FG50003BGF0000FG5D0002G90C00019FAA00"
    "0006GC10002E2G50008A1E40003FG9000001F3000008D097002F40F502DEBAF00BFDGGA000003G5000009E000002G600"
    "009FE2000093980000006A00000AF200002ABF2003100E400AD72C40007EGA00001E2000000G5000000EA000000BG100"
    "0003E60000008C0000AEDG83002BCFGF0001F2000005F040000D81G3005F25F005FGGG800ECCEG200000CC000002G500"
    "006GC10003G59D0005C00C6008E2078007C2048004C0097003G57E20007GD30003ABCC6008EB884008A7300008GEF400"
    "0220690000004C000184AA0002FGD20000EGF3000065D8000008G500000BGA0001304F8006F009F005G56EE001BGGE20"
    "002E5000009C000001F1000003F0000006GGGD1002G847B000CB18B0003CGF4001CGA10008C3B8000CD6C80003FGGG10"
    "00000D60000006B000D005C000CGGG80000C4000006E100000E2000002E1420004GFCF5003G605B0009B4D50001BG900"
    "00BA000000BF000000BG500000DGB0000027G2000002E600006AFD83008GGGGC004FGDDA00CDAFE202G62E6001509B00"
    "007CGE60008FFB20002G8000007F4000009CCC6001E6442004FC910004F8BB0000100E4000000A8000A10880009GGF40"
    "0006G000000CD000005F36F001EB0DD00AGDCG500BCCGE200003G9000008G3000009D000002G807100AD16G506GB8EF0"
    "0DGGGG900220BG100004G7000009F200006GGGC000DA8G5001F19C000040D70000AGGG90007EC830003F5000008F0000"
    "008C500003G8C10000E0C3000030C3000003E0000005C000005G644000EGGGE000AG800007D4E70007D27800007GG500"
    "01CDF60003G24D6004G41BC0007FGE20009G700000EDG2000079F8000001D9000000E7000004G500007GG860009FCGG9"
    "03FG800009GBF2000BA4G2000246G100000AD000002ED00003GGGGD103GC8CB1007CD40000G6620004D7820007GAAE10"
    "02200A600000088000B10A80008FFF20004G8B7000AGFG6003G46F000380D800006GGD60003ED930000E6000004F2000"
    "006CD20003G61F0005GDCG2002DGCF40000008800010088003G20A70005BGD1002GGGG4004G6871004G7200004GGG600"
    "0054AF0000001E6002E44G8003DGGF100009D068003F30F901DC47F307GGGGA006CAEE200000DA000006G200000CB000"
    "000A9000005F009500EA07G405G75G600BGGGE00034BG8000007G200000CC00000BE500006C4D4000AA04E0007D5DG20"
    "01ACCE80000007C0001001F000B845G1009DG50003G84D0006A1092005400480084004800660049000D20780008CDF20"
    "002BE81003E98D4006B14E10009EF600000CEA00004C2D50004B1B800019GE2001BDA10008C3DA0008B2BG1001FGGG20"
    "002839600000079002C309C0019FGD30008GF60005E44F0006D01F2001BBDA00001GG30000C95D2000G21D80008FGE10"
    "003CC20000BA7E2000B1084002E205700890068003D00C7000F6BC00004FB100005CC930008GGG40009GGE1000BGGC00"
    "00CGGC0000BGGC00004GGC00006CC60001FG400009GBE0000CA5G0000478D000001F6000005G200004FEABC100DGGFB1"
    "006CD90007E67G300465E600000CE40000003E200000097000310980005ECD200008E000005G719302FC0DG409GAAGB0"
    "04FGGE100001F9000005G300000BE000018FGG9008GC885008E7000009GGC00008D8G3000001G4000008F10000CF5000"
    "005D100000CD100000G3000003G0000003GGE90002G8389000E203G1006FGE50006CAE8000FEDG3001C09B000004G820"
    "009GGG90002F6000003F1000008B0000007FG80000G76F3004G07D4000G28E8000CEE700009G600000B3E200005BAA00"
    "01BGB10006BGG7000129GB0002ECGC0000384D4000000A80004CGE6000E84000002E910001CCB80004E10D3008D00A60"
    "05G1089000G00B9000DBAF40003FG500006A8300006GG900009GG600007GGA0000BGG800007GG90000AGG6000049CB20"
    "008FF20002GDCA0003F19B000001F800000AD100008G700006GGD7610075CGF2007DG50006F76E000951A9000008G500"
    "00016F10000001C0004525D0006CGE500006F100005GA08602GB09G608GEEGD106CCCG300000DB000006G500000AE000"
    "017FGGE00AGB631007GGC00008GCG4000140D8000000F8000007G20000DF5000002C100000BC000002G4000006GAA500"
    "05GFCE6004G308C000E94BD0003EGC30003FGGC000CC7G6004C09D000011D700008DGG6000CFC610000F5000003G2000"
    "00EG800000G4D88000C7CE50004FG500000EE000008AB20000D0C30000EFC10000CFD20001G55D00017D084006BDDF40"
    "019CCD1000000B60000005E000ADCF60003C700000ECC40002E01D0001C0075002D002A000F303E0007C8BC0002BGB20"
    "003DA100003GG400001GG200006GG100004GG100004GG300007GG000002EG50000DGD10006GAF50003F0B9000040C800"
    "0000F8000008G400005GGDA100DGGGG9006EGB0006E74G4007705G20000EG5000004DB0000000B8000024AC0009GGB30"
    "0008G000003G800001DC04D106G97FA009GGGF200041EA000003G500000BD000005AEGB002FF541002G9410002GGGB00"
    "02910E4000001E300002D700007E70000019F100009E400000G3000006D0000004ECGD3002FD43D0009824G10009CC80"
    "005CGC4001C75G50029089000023C10004CEFC40054G1000001C0000003C000002FC100004GDD00000E3FC50005GGB00"
    "02DDE20005D0680004B01F0002CGG700009D600000E7B3000478580008AFE90000479D10000005B000202C6000AEE700"
    "005F900000F6B60007900E000590086004D0048001G004B000F75G40002FF50000CE600002G7DA0000G21D40009D8G20"
    "006GGD0000023G000016DA0000D98200008FGG6002GB500003G5000005GGD0000AD6F5000310B8000006G400009G8000"
    "006BGG3005GF50000BGF20000CFCC0000214G0000000G4000002G300005GD0000006D300001EB000007F200000AC0000"
    "00DFGD5000AG5BE0007F5AE00003EG90007GGG6000CD510000F7100003GGD0000BF5G4000531G300000BC000007F1000"
    "000C6000008FD40005G63C0007E10B5003E007A001E20990009B6F50000AGB0000AD910002G7A80000CC7B0003GGG700"
    "0058CA1000000B70000003F000BGGG8001DE200007E9500006D3C64001ECEG40002GG70000BE8D0004G42E2001CED600"
    "005FE30000C72C0000G30C1000CBAF00002AFD1000000E400006CF20007D4000004FG60000DBBF0000FDFG70007GGB20"
    "005FG20000G9CB0002G68G00007ED8000003G500003EA09B01DB02F807G9BGF106FDCG9000008F200001F7000005F200"
    "006FC500008GGD10008GGC00008GGA0000GGG50005GGG10003FGG20000AGF300005ABDC002E88DA001604D000001F200"
    "000BF81002FF8700019C0000007B0000002FGF0000C9BC0005F0D7000563E5200009GG90007G9200001F3000003G0000"
    "007EF70006G87G400B61AE100104G6000002BD1000000B7000348E3000ADC400019GGF3008GC883006G9300008GGG400"
    "0364DB0000008D000058FA0000BGB100002GA000004GG500008GG300009GG300008GG300008GG100005GE000001CG300"
    "000AB100001F8800054A0C00078A075006A0029001D002B0006B4AB00009FE50020890000D5E87000C52090007500350"
    "03A002A001D001C0005D59D00009GG70006GDCE100E44F400170A7000002D100029EGC00046F24100067000000A40000"
    "009G600003G1GA8000F6G800003GB000001EC0000069B20000C1D00000CE300000BGF30005GCBD0003D15F000000CB00"
    "0001G700000AF00000CGGB1000DD8DG8006GF50001GE8F1009D10C60059009A0069009B007G10BB003GBDG80008GGC10"
    "000EE900004GGA0000DGF20001FGB00007GG500003GG700000GG8000003CC000009GE00000G8D70000C088000000C800"
    "0000G5000009D00000AGFA9100CEDGG5001EG80000AGB400001B100001C3000002GED81003GGDG8000CG7FC0001DGG80"
    "00BGGA001EG9BG101E30CE000006G70000008G5000000CA000245ED000BGGG40009GGF4008G97EB00551DF10000AG700"
    "0001BG4000000E8000346G4000EGG80000AGDCF504G8CG6006C2G7000159E100017GC20008GGC50001BA000000E60000"
    "01DGGA0008F8FF000385G6000004G90000006G50000005G000866DC001FGGE3001CGG9000BF97G300D31AF10000BG800"
    "0005FG5000000AD000748F9000DGGC10001EB000009F204002G607G208G66GC005GGGF300014G8000009G100000FG000"
    "001E6000007F100000D7000000D5000000E7541000AGDEE0009E14G3001CDG910007B000001GA000007B000000B81100"
    "00CGGF5000EB01F0006B13E20008GG70000DD000007G300000CB000000E6000001GCGB3002GF99F200BC13G6001DGGF1"
    "003F700003FB117008G20DF008GDEG500089FD000008G200000CC000003G4000007CB10000CA5E0006DD3F00089BG800"
    "01BA9B1000000D6000000AC0008CGD20000FC100005GG600002GG300002GG100006GD000001GG200003GF300000FG100"
    "0008GG7000FGA81003GC500008GGG30008B2D9000000BD000000CB00000BE200005G800000A5C60004E02D0004A00980"
    "0580088002B0096000F68F10004DC30001CFA20004E16C2007F01E4003FCFA00003F10000003D1000000A60000BCD400"
    "01CGGG4004GA411006D0000006GC500007BBF0000004G200002DA00002GB000000AG800004GDG30000C1B6000000C800"
    "0000E5000007G640005GGGG400BF986001EE600002G1E20000A7A640001CGE50003EG40001F56C0004A01F0001CCC500"
    "01BGGA0008GB7G1007B05G2000207E000000BC000003G600005FGB6000EGDDG5002EE60000AFBF2003G30C60039009A0"
    "0AB008C007G10BD000FECFA0003EGD50005FD20001FB8D0005E00E5009G1079009D005E006G205F002EB5EC0005FGF30"
    "004FC200009GE20000CGF00000BGC100009GE00000AGC000009GE000004CC00000AF8D6000DEEF2001F0D7000279GDD0"
    "00AGB720004G2000007D000000C400000009F200005GB10000DF100002GB000002GB440002FGGEA1009G73F60007FGG6"
    "01AED4000CB58E000832C800003FF40000147E50000007C000001BB000CGG91001FGA00007FAG00004C1G4000023G100"
    "0004F000000BC00000BGEEF301FGGGG5003FC200001GG600004GG200003GG600004GG000001FG600004GG400004GG600"
    "00B84DG302GGGE9104D6G400002FA00005DGEC2008FFCC2000F9000000G700000009C000004G501002E905F108G9CG90"
    "05GDDD000001F7000004G100000CC000001D2000008F100000E7000000E6000000G5993000CGD9E1008F01E5001BGGD1"
    "01AFGB0008B47E000712D700000AG60000001E500000079000203B7000FGG70000DEA200006GGG00000GGG40004GGE20"
    "008GG70003FGG40001GGE10000EGD300003BEC3002DA4AC002B209900003AA10007GG2000030E3000001D200037E5000"
    "00BC200000F8D200007B990004CCG70002AC9C10000007B0000000G2006CCDB0001BE500000FGB00005GG800005GG500"
    "004GG300009GG200008GE000002DG900004DGG7000FA7G1007C0C7000953G20002BGGC7005AGC830003F2000006E0000"
    "000D6000005G800000B8000000D4000000EFGE5000D700D100A605E0002DCF4000AF800000G4B35000E57A70004DCB00"
    "002EC00001E7C40007A03C0001ABCA000008C000005G302001G51AF109G49G7007GGG7000028G200000AD000000CA000"
    "01CGD7000CB44F0008306E200009G80000015D3000000780000009A000AADE10001CB100001GG400003GF200009GC000"
    "00CG500000EG6000009G8000002BD1000009B000005F100002G4039007E01EC009GCEF100068F6000004G1000009D000"
    "005FC10000886C0002500C2004E0086007B0097003D00C3000G59E10005FB40001DGGB000AG7000005F4000002GE5000"
    "03FGG3000010BB000015F90000DGD10001DGGC100CF6CG300DAAG900005GF4000002AE1000001G7000315G9001EGGB10"
    "002EF300007GB00000DF100001GB000002G9000002GGG90000DGAG70003FGG4000CGF60000FC7F1001FF7G4001CGGE10"
    "0004AD0000001F3000302G6000DGGF10001A7000006D000000D5000002G1520003GFB95002G602E000AA15F0001CFE60"
    "003GC200006GG300009GG000009GG100009GG000009GD000007GD000003EG30000BGCCG703G98GA001A06E200018FFB0"
    "00CGF720004D7000004G300000CC0000002AGC0002FE810002G4000006GED3000AG7BC0000104G0000007G20002EG800"
    "0005E000001F500000B9003004E108F00AECDG6005C9BF000000B9000004E100000B8000008F202102G504G305G8BG90"
    "04FEDG200000AA000003G3000009B000008GEF0000DBFB0004E1D5000378G43000EGGD70005D2000006A000000A60000"
    "02FF30000BFBC00008A0G0000132G0000004C000001C900000EGDDF302DECC81009EE30004D14B0001E1B76000FD9C30"
    "001EE000005EC00000C1950000BCD300005GF30000DFE70000D4D8000000G5000007G000006F900002GGG9D300529GE3"
    "007GD20000EFD90000E89A0000129C000000D8000005G400006FG555006GGGGD00AGF82009GC89300DG9000007GGA000"
    "07D8G4000001G500002CF10000DG6000008B8AE803FBCG5101G0B8000015G500003FGE00007G3000006D000000B70000"
    "008F900001GAG9000262GG100399GE000075C50000007C1000002G40009DCA10001AGD0002FF960005G1000008GE5000"
    "0BGDF3000130BC000002DA00001EF3000009G300007G700002F8017009E02DE008GEFG600178GC000007G500000CC000"
    "00FC300000F9E10000CAF100005G4A70000BEB00001CDB0000C6094000F45D6001EGGB2000E92AB0005G5E50000CGG50"
    "007EE80001E36B0004808B0002DCF200001AF200007G735003G73GB009E1AE200BGGGA000248G3000009D000000C9000"
    "002C9000001F7900000B1E1000A8BD10009EG90000001A30000003E2005EDEA1002CC10002CC6B000AD00A2008B00660"
    "0790049003D008C000CC9G70001CG91003E5000002FF3110006G4D80000EED10002FD10001E8F00005C0C30002EDF300"
    "00FFA20000G58B00009C1E40006GGF200004B1000000770000002B0000ACDB0003G9200003GDC00000CBEA60002FGA20"
    "006EF10003F4970006D1A90002BCE400004EE20005GB7A0004G40B1007E1075004A0077001C00C3000966D00000AE400"
    "0005FD10002EGE0001DGGC0009GEG6000356G4000008G2000009G3000004FD1002EG60000CECF0000B28C000000BB000"
    "002G4000007D000001ED887002FGGF80019FG6000DFAGB000534G7000008G7000001DF5000002DB000C53DE000AGGE50"
    "0008F000005G600001EA077005G31G7008GBDG3001BFGD300007G100000CA000005CG90007GA300008D0000009E46000"
    "04ECDD1000000F4000004F70004CD800006F400001E7000004F1000005B0210004DCGD3001G218A000C40BC0004DCE20"
    "008EGG2000B67G100000AC0001BGGGC002CDD200001E4000008C000000C7000001A9B5001E812B000E30B50002CCB000"
    "002FE40000B51C2000D00E20009DG900009GF30006GBAC0007F11F5003G69G90005BDEA000000AA000000DB000AGGF60"
    "003E930000BD8E2002G3094005C004800880078005B02F3000E5D700005E50000000DC00000AGE0001CGGB000BGCG800"
    "0647G6000006G5000004G8000000FB0000BGC10003G9G5000061GA000005G6000009F000003F600000AG458100DGGGG6"
    "007EGD1009F8AG700510EE100004GC000002GD0000006G7000976G90005FGB300001F900000AF300009G536005G80CD0"
    "0CE48G900CGGGG000042EB000001G90001CGGF0007G943000AF100000BF8710002DGGF5000000DE00027DG9000EGC500"
    "003DG70001CG800002G8000008G4000009GAB40006GEDG3001BB2EA0002FGF60005DGG6000C64D9000001F300002AD20"
    "02CGGC500169B000000F1000006B000000AGG80005G67E0003G3D90000DF900000AG100000GF600001FCB000005GA000"
    "008GA20000CDEB0000AD8G20004FFG8000038BD0000005G4001227G5003EGGB1007B310001EGDD0003GC166004A40480"
    "08800B5007902E0001C4CA00006E90000008D300008GG8000CGGG200099GA000002F8000004G7000003GA0000007D200"
    "02AEGC000AC7AC000000DA000003G300000DA000005G100000EFCGA001GD9300018AEA000CA66G2003007E1000009B00"
    "00002G10000008C000402B9000CGEC40000BA000008G500003GA4B000BD09G000CD5EG8003CEGB30000AB000000B8000"
    "05FCCC400AECC9700CB0000005FA0000003G3000000F4000017G400004FC00000006C000005G700000C9000001G50000"
    "01GAC92000D825D0006B12G30008BEB20029EGF003GD8AG001200B90003BCGB000CEGC200003G3000007A000000E5000"
    "01CFGD1004GF7F4000G6BF20009GF400008G800000FFB00002GAC00002DGA00000DE910005GCCC1006G22G5003G53G90"
    "009GGGA000067F9000006G5000AGGC00009EF60002GC1D0003C7084006B4072004900C1003904B0001C5C300006E5000"
    "019FD40008C4880009B05G3004D8GG6000482B9000000A8000703E60007GE800017EGC1007G96B100BC410000CGGF600"
    "0394BC0000008G000000ED00006GF30003GDFGB005GEC8A002GC0000007GC0000007G8000000DB000368G70002FF9000"
    "002EE000007G700000DC000001G8420004GGGF3002GC46G200D836G6002DEGC103EEGGA009F971000AGB1000017E9000"
    "0007G0000006F000011BA00003FG4000007EGD1000FD3D8006F2088006G006B009D00D9005F05G5004G9GC00008GC300"
    "006CE40002F21F0002E03G2000D5EE60002847900000099000505E30007DC40001D98D200A700C200960960001DAA000"
    "009G200002C5C1000490950001CB8000017EA0000AC597000A606F0005BBEF1000271A500000095000530D50004EEC20"
    "00DECF4000G55G5000D7F40000BG200002DA60000851F0000581G00001AG80000003G200000CC000005G25C003F80BD0"
    "09G47G8009GGGG200000DC000001G900007GD400007GG900001GG900003GG900008GG80000AGG400009GE100004CE800"
    "00CGGC000064AD100000D9000059GGC003GGB300007D000000B8000000G30000019CGG4001B87G4000008D00005BFF90"
    "00GFD520002G5000009E100000EA000002AFGGE007B46F900006FC00003G9000005G8000000BF2000016G20001GG6000"
    "002CGG7000AD783002F600000BE7510005GGGF6000444E8000047E50002FF5000004FC00005FGB0008GGG4000EBBG200"
    "0007G0000009G2000009G3000005G500028FGA000BGA4F100CD00D500BD00F7008G00F6006G15G2002G6FC00007GE100"
    "008FGB0002GA4E4006G208800AC00B6009B00F6008C07F1002F7F90000AGC10001DGF6000AF9BF000790CC000000F600"
    "0008F100002FA00000AGA9G200DGFB40009GF30007F7G7000220G2000006F000000DA000003G335000BEAG6000BGD500"
    "003CGD0001E9AD000020AA000037FGA000GGF300003D7000000G2000004F0000005CGA0006GD3F100B855A0004B2C200"
    "006G6000002F8000008D8000005F400004FGD10009EAG6000116G2000008E100005G500000DE000005G988A004FGGG90"
    "006ED10003GA5B0005G00D0006C00C3007C00D3003B05C0000D4F400005G6000001GB000000FG100000FE000002GE000"
    "001GF000000ED000000DA000000CB00001AFF5000BG9CA000F60E7000006G500001FB000005G400001FB8CE101FGGC50"
    "000ED100004GB00000CG100001FGE10004GC8C7002F808G200AE9FF1001EGE20029FGF200BB59G3000009C0000006F10"
    "00000E9000000CC000536F7000CGF910008EGD100A946G300001AD000007E2000007D10000008D1000003G4000EGD900"
    "004BGG2000889E000000BC3006FGGF60037BD000000F2000003G0000005C0000009EGG2007F74E8000005F400000G400"
    "0000F40000007C0000F28E0000AFC30002DGGF4007C88GC000008G700000EA000000CF3000002GB000447GA002FGGC10"
    "0001E500000BB000009C100005F102400E700DA00FGGGG500388FA000003F20000099000003F400000AC000000C84300"
    "00EGCE5000CA04D0009B06G10008EF80000EF100006GB00000DF200000GC000003GGGA1002GC4BC000AE6EF0001DGGA0"
    "000DF200004GB10000DF100000F9000004GEF80001GF8D9000BA0BG0002EGGD00004F700003FC00001EC02B00AE00DC0"
    "0BFCFG5004A8GB000002G4000006E000009GA20000GEBA0001G9CF00007FGG80000A6GA000001F9000017G80006GGE10"
    "006GB000009GG500008GG40000AGD00000DGC00000AG9000009GA000004FG30000ACGG8004GGB5400AC300000CB00000"
    "06GE8000005AG3000048G30000DGB0000075ED0000GF692004G7044006C1057008700C3004804C0002C5F400006F6000"
    "009GG70002GB4F2004G22G6000DBDGA0001ADG6000003G700002DE1000BFF600009GG70007GC7B200DD100000AGA7000"
    "008CGA0000005G300010BG10007GG60002BGF6000BF9ED000710D9000001G800001BD100005G500002F9244002FGGGG1"
    "029GDD200BB42A4006C24C00006ED200001EC0000087D00000C5C00000DE300001CGE80004G8AF3000005G300001CF00"
    "000AG500005GA00001EF6AB000DGGE8100B8C50001FB6E2004B009400480086006700B3005805D0003D5F300009E4000"
    "004DF60000FB2E2003E10C4005C0095005500C2004902D2000D2E700005G7000003GC100003GG500002GG500000GG500"
    "004GG200004GE000006GE000002GE00001DGGC0003C6BE0000009C00019FGG9002CFE550005F100000B9000000F30000"
    "0019F200005G710000E8000000F6840000FGDE7000E303C0006979F0000AEE2003CFGG3006G99G600030BF100004G700"
    "0007G4000000DB000045FE0003GGF60001DGG50007A4AC000000B7000002F200000C7000006C100000G3153001FGGF30"
    "001CG80002DGG8000DGEGC000B67G200000BG100000DD000000FD000000DD000009FF20003B4F6000000G20002CDGGB0"
    "02CFB610003G0000005E000000B700000002G300000CD000008F210001F81DB009G7CG4005DGGB000002G5000004G200"
    "0007C000004G800000CB000000FA861000FG8A8000E700C0008B05G20009EE5000AGGB0001B76G300000AF000000F700"
    "0000F90000007D000054AG0000AGGA00004CD200005GG500005GG600009GF00000AGE00000CGC000005GB000006GD000"
    "017FG9001DE7EE000618G800003G9000000BF61000007FB000510BG200AGGG70017DE3000AD25A000C407G0006A9DF10"
    "00240E4000000D2000605E00005EE500003CC300004GG400005GG50000BGF00000CGE00000DG9000007GA100005DE400"
    "005EF20006GAF800014088000017GG8000DGG400006A9000000D4000005F20000009D000003F400000CB000000GB8400"
    "00FG8C5000ED01F1008C04G20008CDA100BG980000ED6F2000966A00001ED000001D80000057C00000D0A00000DE8000"
    "0006G600005GA00002FE071006G33G900BG8BG6003FGGF100003G7000005G300005CGA0008F5CD000003G4000005G300"
    "0002F80000002E7000000DB0005GGB30003GC10000AGG00000CGC00000DGA00000GG100000GG000000AG1000002D9000"
    "0008E000002GA00000CG135005G62G900BG08G700AGGGB100179G400000AB000005C000000EAEC0002GG8B2003GB0930"
    "05C20C4001C00D3000D68D00003EC30007GGGGB008G9601003G3000000BC0000004G1000040E4000099G300005FD0000"
    "04DGGF300AC78G800001CF200004GA000008G4000001GA000574FD0005GGG700000CF400007G920000CE000000GB3000"
    "03GEF80001G60C8000CC4DC0001BGG4002EGG70006F56D0004F09G6002DGGF9000142F8000001G600001CF2001EGG600"
    "000CG100004GB00000CF100000FD840003GFBF7002FA04F3008C46G5001BGGD0000EA00003EGD0002GGG50001BEF1000"
    "008G1000007G1000001F5000000DD000018CGG3005E8AF000025EC2003FGFC80036E7000002F100000A8000000E40000"
    "00FDCC2004GGC60000G4000000B70000007E0000000E6000045E800001FG40000003F700000DE300006F266002F40F80"
    "08C04G100BECGA000287F4000003G2000007E000004G500000E900A307F009F00CF8AFA008FCGC100005F3000009D000"
    "005CGG7000A94BC000000D70002AFGD000EDGA100034G200000D9000006D000002DGA00006DAG0000008E000001E9000"
    "009E100001E7001004G57CE003FGGA10013FF2002GGCG6001F76E00005EEA000007G7000006FD800008C7G00004FGE00"
    "02FGF10003B5G4000000F5000004F100002E500000FA000005G3343004GGGGB002DGGA002FC7AG000310CD000003G400"
    "000D9000006F300000GA688102FGGCC1047DGG400BGE92000E5000000C80000009C0000002DG9000013EG30004EGD000"
    "00CGGGF0003428F000024BB0006FGGC00056F720000AD000004G200000EB000001EGF40004G9BF3006G18G2002EAFG60"
    "003B8F5000001G500033BF1000DGE40008GCFG700DGE64100CA0000003GA0000006F90000004G2000146G50007GGA000"
    "0003E600003EA10001DA000009E107500BF89GA007GGFF200000CB000003G20000BGGE0001GFDF1000EFG600008G7000"
    "008G700000DED00000GBF00000CGA00000DGGF2000EDBG2000BDF600005GA00000AEF00001E3F70006B0F60001DGF300"
    "002ED00000EF300006G215000AD05G2007G9CGB0005CGA20000CC100000G5000009GGA0002G9BB0000F7CG30007GFF70"
    "00000AA000000BA000B26G60009GGB1000ADE80000D95C5004D004800480048008400D2008409A0004CCD10001BB1000"
    "00EGD91000CA9G30009EDD10003DG600005GC90000D8E60001GBF10001DG6000009FD30002E2650004900F4001D57G60"
    "00277E3000001E100031A90000BF910000DG940000F99F1000B9DB00005GE100007GA00000EAG20000G4F70000BGG300"
    "000CB00000CC9A0002G21B1001F0058002E005A000D202D0007907B0000BDG200001DD00004FFG0008GA6E000A608D00"
    "0000AD000000D9000000E7000000G700002CGA0002FA6F0002714E0000009A000000C3000008E00000FGFA5000188BG6"
    "04EGGF200CB24G500201BC00000FG3000004FA0000001EA001703E8004FGGB000002F200000CC000005G200000BA0380"
    "05G12F5009D7EG2005FEGA000002G50000CGGG7001EF641008G2000009GCC91001888FA000000DC000826G5001BGG800"
    "000BD000001GC000004G6000007GG700008GGEB0009G35G4006F5EG2001BGF4003FGF30003A8FC000000E80000BDGG80"
    "01FGF720005G500002GB000003G50000004FD30004DEAD0008G88D0000FCFB00006GD10000BFF20000C8F800005FG500"
    "00DD100007GDCD0008D1FG4004FDFFA0006B39D0000005G0017019F101DGGG60000EC100004F7A0002GF5C2007G00B50"
    "05C00C4001F00E2000967F00001DG800000BG300005GG50006GFG3000BBAG100000AF000000BD000000AG2000007G200"
    "006G8000008DG300002CA80000007B0000009A000000D700001AGA83004GGFGG009GGC2003D54E5000007F200005GB00"
    "00008G7000000D8000455F4000CGF5000002E100000E8000008F100000D605B003F00A9009D47G3007GGGD000032G600"
    "05GGGGA004A444000AA0000004GD71000028EE2000001G700332BF0005GGC100000CD000002GC000004G600000AG8000"
    "008GGF50008G06F1007G4AG3001BGGC0005DGE0001E85G2000102F2000028F30000FGD800006E000000D7000007E0000"
    "004GE3002EGCAB000DC9FA0003EEG400009G800000CFE10000CCG400004FG300008G400006C2ED000961EE0002BC8G20"
    "00000B800000079000201C600089D700000GB10000DGA90002GB1E2003G1087004D0089003G10A9000A83G40001BGD10"
    "00005F100000BG100008FG3002DF5G0008E23G0000004F0000005F0000005G10004GG40000CB7B0000925C0000007B00"
    "0000D6000002G100001FFA10005G8BB001DGG8000BD4D7000717G100005GF90000368F80006107D004G52DA001CGGB10"
    "0001G300000AB000001E3000007C039000E20A7006D5BE100BGGG9000121E100006FGG3000EG661003E500000BF84000"
    "01ACG80000005G000005DE00004GE300002G5000006G2000009D000000BDCB2000EGEAE000D730E600AE48G7002EGF80"
    "009DGG4002C54E4000005D000003DC50000DEC80000D6000004E100000E700000068FD1001GGBF4000F98F2000AGGA00"
    "00DGA00004FAC00002F5F000008GA000019E800008B37B100C703G4003DCEE70000006700000099000002G10008DE500"
    "009GB00001GDF70007G64G3009E00BA008D007D007D007G003G77F60009GGA00006E760001E6DG1005C09G3001FEDB80"
    "000008800000078001E21C10004DF50002GGGG3001GD640009G3000009GD700003BDG90000007G1002B5CE0003GGG500"
    "008GG90001GFB80001EA000007GA600002CGGA0000017F0000B5DD0000BGG600000GB000006GA00000BB000000CFB500"
    "00EFCFB000CD00G5006F4BG4000DGE9001EGGE1000AD640003FB300005GGG6000001AF000000BB00007CG50002FF5000"
    "002ED20000BGFD0000DD1G3000CD0F6001G71G4001G58G1000FDFD00003FF200003D600000EBF80000F1EG1000BDCD50"
    "003818A00000096000943G20004EE700007AG90000FGDF1000ADAG20001GGB00008GG50000F8E70000G7G400009GE000"
    "003CC10003D69C0009502F000794CG10009B3A2000000B3000A21D00003DG400003FD20000AGCD0000DD9E00006FFB00"
    "004GE10000BEF500009AE900004GF2000002F800001FD300009D100001F605B007E01F8008F9FG3001BGGA000002F500"
    "000GD000000FF000000GD000003GB000002GC000003GC000001GC000000CF100003BGF2004GA4G4007605G100000AC00"
    "0009GGA00006F610000D9000001F2000006GG60005D57D0001105B000005EE800005G82000088000001E3000007C0000"
    "009GGC0002G89G000180DE00000DG5000008EF50000009E000960BF0008GGG60009GGG7003GB441006G1000009G94000"
    "006AG80000208E0000D78E0000AGG400000EB000000CG200000CG200000FG100000GG100003GF000004GE000001EG400"
    "001DE10001BGAC0006GF0D3007E5089006D008B004F01E9000E8CG30003FF400002ED10000EGDB0004GB1D3005G30A90"
    "06D009B002F01F8000BCFF10002DG50000AGGA0004G61G2000A01G3000005F000000BB000002F400002DGC8000DFB8E7"
    "00AGE60000G86G3000950D6000000E8000004G200000DB000029GA6100CGEDG8007FGF0002F25G100000AD000003EB20"
    "006GGG80005D7000003F100000AC0000006EG60006GG8F0007EECE0000DAG600004GA00000BDG20000F5F400008GF100"
    "00AGD300006FCD0000066G0000003G1000007E000000D800004FGD85006GA9CF00AGE20003G98E0005G32F6005G30CA0"
    "07E00CB007G13G5004G7CB1000AGE3000001FC00000CGD0000BGGD000BGBDD000370CE000000BD000000FD000002FD00"
    "00BGG70002GABF0000F44G3000335G1000009D000001G700002CF64100AGGGGA000EE100003GE00000AG200000GG8300"
    "03GF8E2000GB0BA0009E7GA0000CGE10008GGC0000ECAE000033AA000008G5000007G60000407E0002G5AG00007GG700"
    "007GGE0000GCAF1000A4GA000009GB1000007G8000000G700084AF2000CGG60000CGG50003D8EF100000DG0006GGGGD0"
    "069BG950000EB000007G200000DA0000005FGF100AGB8G500CA1AF100008GB100001AGA0000207G0008D5FC0005FGE30"
    "00AGGA1004GBBG300191AF100005GA0000007FA0000007G002C74EF100BGGF400001D700000AE100003G500000DB0380"
    "06F20E7008GCDG4003BBFC000000G900000EE100007GA20000EE100000EGE40001GG8G2000EB0D90009E6G70000EGE00"
    "000EE100006GC00000CG200000GGG90001GF8E9000EC0CD0006E7GA0001DGD10000CE100005GC00000AF100000EF9200"
    "01GFGF2000F71CA000AE4FC0000BGF500004E200001F7000008E028001F50AB006E16G500CGGGE2003CDG3000006A000"
    "000CE500006B4F0000898G30003EDD4000000A700000078000D61790001AEF20001FF200000CG700000EG500000DG200"
    "002GD000006GD000006GB000001EG700007GGA0000ED740005G600000EF8610004CCGD2000001F6000566G40007GGB10"
    "001CC300009D5E0000F30A2003G4094004D0092003D01F0000D68900002EC200008G630002D5AE0004E19G0000CD8D00"
    "00030B2000000C2000410E10006FGA000049DD0001DF62000097000000D3400002GGG80002B30A4000254F10003CE800"
    "01DG900008F8F5000B90C8000000B8000002G3000006F100007GGGA101GEA8B1002GE20001CGGA0004GCCC0001FBG600"
    "006GD000009EE80000AC6F00002DGC00007GE300009EBF0000150F5000000G5000003G400001CE10005CGGE1008GEAD3"
    "005DB10003GB8C0005G00D3005D0067007A0087004D01E5001F5CA00007GA100004FD20004GF7B0008EE0E20079C4870"
    "06B0079002F10A8000B84F40002EGA000003G800000BG90003CGG8000DG9G8000120G8000002G4000002G6000001G900"
    "01CGGF0007D78G0000108E00007FGGB003FCF420001C7000002G200000D900000008D000000E6000006C0000008D8200"
    "00DGDE4000B823D0007B5CB0001BC40000DGG90002G77G000040BA00001DE3000007FB1000012DA000891CB000BGGF10"
    "007GC00001G7D30000F2A6000040C5000000F1000005D000006FE871006DCCFC001EE200001EG300000AG200000BG500"
    "000FG500000FG500000AGC10000EGB00018GF00004D5G0000000G0000017E62000CGED80008G4000005F000000E80000"
    "0007E000001E8010008E09B001F61EA008F08G100AF9FF0005FEG6000008F200000G6000003G6000009G000000CGC910"
    "00FGEDC000EF70F6009E47F8001DGGC100AGGA0008F76E000130F800000CD1000007F40000008C000060CA0000DGF300"
    "002EE000001FG200000EG300000AG500000CE100000DD000001GB000002FC00001CGE20007F4D7000020C7000006G800"
    "000FDF90000108F000841CA001DGGD10008GD20002G8BE1003G1CG5000CGGD90000429E0004508D001GB1D70008FGF10"
    "002GA000003GG100005GE000003GD000001GF000001GG000002GF200000FGB00003DGD1003FDAG2004A04G100003BE20"
    "009GGG80009CG000001CB000003G8000000AB000000EE000004G3000006GA20000CGCB5000B732E0006D04D00009GF50"
    "006CD70000GAGC0000D7G900001FD000002GD00000A7A20000D4D300007F90000000CA00000BG300004F400000CA08A0"
    "06F11F8007G8AG7004FGGD000000C900005GGA0002GEEE0002E4EA000008G80000008G6000000CD0007B8GB0008GGA10"
    "002GC000005GG100002GF000006GE000008G9000007GE000008GB000002FD0000006G600003G900001DD121007G51EA0"
    "0CG8CG2002CFGB000008G4000008F000004GC10002GGB80003GD1E2004G00D4004F00D8001G10E5000A87F10002DG800"
    "007GF400003D42000099000000E7000000DGD2000004B8000001D600006GE000009GG7000DF9CF000540DD00000BG500"
    "000BGA3000004CD000711CE0009GGE50000F2000000G40000069000000CGG91000EB089000BE32E0008B4E70001CE600"
    "006CF91005E45G300983DG4003FF7A8000010C8000000B2000745D00005EF400003GE10000BG600000F9100003GEGC20"
    "04GEDBE000G537G300BC8GA0002EGC00002GD000004GF000004GC000007GA000005G9000007G7000003G9000001CF000"
    "008GF4000AGBDC000C70D8000017GC5005FGGE90028FA000007G200000AD000000BGGB0000AG720001G9000000DG8000"
    "0004F4000000E8000038G40000EG90000001BC000009D100008F300002G615200CD8DG900GGDBG600340BE000001GC00"
    "0003E900000DB100009E000004G404200CC7EGA00DGEBG400220BD000003G900003DGG5004FDAG6001814G400016BGA0"
    "00DGGD3000A7G400000BD000004G8000007EB10006F67A000B702C0005401C00000039000000B3000009D230007GGGG6"
    "008FE70000CGEG00003FEE10000BG100005EE40000C6880001G29700009GB10000BGB00003GBF60001A3AA0000009A00"
    "0000C9000005G50001DGGD8000BB8DG7009GD10008G8B8000BA08A000150BB000000D9000004G200004EF741008GGGGC"
    "009GGG40008G540001F9000009F8730003CCEG5000001BC000121BA0009GGG40002DG80000D77D0001707D20001AGGD0"
    "006DG2000015B000000C4000002E0000018BDC0005904G1007505G5001DBD680003414800000075002812E00008DB300"
    "00EGGG2007G510000ED7300004CDG90000006F0000009E00005EG30001FB40000002E500001BB000007E100005G34620"
    "0EGEGGA009C78G400000DC000003F600002FF30003CFAD0003GEBE00007GG900005GD00000DGB00000DGF000002FA000"
    "004FF40006GGCE000BB6EC0003EDE10000CG500001GD900000DAF000003FF0000005F300002G4000008C02C003G10BA0"
    "09D03G500DFGGC0005CEG4000006F200001BC95000E61FA002C4C7A001DC3480000004800034076000C73B00003DF300"
    "002FD200008GFC00009E1F5000ED0B9003GB0C9002G32G6001DBFE00004GF50000A9EA0002FF4E2000D59C00004GE200"
    "00BCA00000F1C00003C2D000009G7000004EG40000C89C0002B00C3004700580064004800490068000E96F20004GF500"
    "0003FG10007FGE0004GGFD000082FD000000GF000000GC000001GG200003FD1001AG300005GE80000AB8C0000118C000"
    "000C8000002F512000AGEEC000EGGD70008G800000G6F10004A0C2000007G3000005DG3000000B6000C99G20008GF700"
    "003G000000AA000001G3D50008D1G7600ED9GGA00BGGE930014G8000002G600001CCCF6001E5541000C0000008GGF800"
    "01445C7000000B400272AC0002GF8100001D400000CD100001G2000005G8420005GEGF3003D1099000BC4BB0002DGD10"
    "000BGGA000AC9F9000D80C5000604C00002FGG90006DF91000099000001E4000004CD50003F8AF2003E22F3000AGG700"
    "0007DF30002B1C5000791E20004GG700005CDC0007D58F0004E4DG30006C8940000008800000068000132D60006GG810"
    "003AG40001FGGA0006A23E1008600A400480058000F0098000CEAG30004ED50000009F00001AGG1005GFEG000180AG00"
    "0000BG000000AF000000CG3000008G3003GF10000AGF60000DAD8000013BA000000F8000004GA57001DGGGG002EFB830"
    "00CGF10005GAF8000173E600000CG7000003DG6000400FB002GABG7000AGGA10000AC000004F100000DA120005F2F910"
    "0BD6GG900DGGGA20027DB000000DB00000BA8C1000GDCA0005E2000007GGD80000448G700000098000947G5000EGE700"
    "002D000000CC000002G2000004E8720008FCDF2002F107B000D85D90002DGB100019GGG1008FAED000E60E6000626G30"
    "000CGGA00006G8000007D000000E6000003CFB2000BD7D8007F15F3001CGG500000DFF20002D0A50004B4B60002DGC00"
    "00BGGC0003G7EG1000FEFG60002A9F90000009A000000C80006B6F50009GGC000029EC0000CGAF1004E3266005700380"
    "0470018003C1058000AC7E30001CG8000000BF100006GG2003DGGG0009GCGE000130GD000000ED000000CG5000008G70"
    "04GF20000BFF700009A6E0000007F000000DA000001G722001CGFGF004GGGCB001CF500004F8F3000031E400004EG100"
    "001AEF4000000C800484AG4002CGD600000C7000006F110001E8A80006F0DC600EFCGG900AGFG810000AG100000C9000"
    "026AC1000EDA51000A6000000ADCC50002857E80000005C000221AA0005GGE10006E100000CA000003G1000005E04200"
    "07GGGG5004G609B000E85D90005DGC10001EGGF100BE8DB000F60E3000515D10000DGG90002GF910000B9000003G2000"
    "001ED40003FCBF0008B17D0001DEG100000EDE20002C0980003D4C600009ED10008DE50005D4B90004D1CE00008EBC40"
    "000007800000048000220B70008GGD20002C700000FEF60006A42E10088008500780048002E00560009C4E30001DF900"
    "01BFD20008D5E90003F1AC00007FEG3000000D8000000C8002845G7001FGF81000ECCC6002F8884005C0000008GCB700"
    "01449F700000088001B45E7000CGG810029BCF6006G9881004D0000004GCB50001548E500000088001645F3003GGG800"
    "0009F10000AD400002F1000005B4400004GGGG4000G20A80008C4D700019GB1000898C8000CEA85001E2000006GCC800"
    "01447F7000000A7001C49F10009GE300002F500000BGG60003E37G30078008800580048004C0088000E98G20003EF600"
    "009CD60000G88F2000GA9G50004CBC50000008800000097000847G2000AGG700001CC41000DDDE8006F00C7002GDCD10"
    "000EG900006A2G0000B85G00003CG70001EGE80005C5E90002F9DC0000388G2000000B600040088004E45E7001DGGA10"
    "002BD50000GADG7000EA0AB0004EGD10000BDC10008A2E3000AA3F10002FG6000005F200000EA20000CE4F0006G49F80"
    "0EFBFG9007FFGB000003G6000006G20000007G600004GG4002BFGG700AGDAG4001304G5000007G7000009G8000009G60"
    "003FGG5000ACAG6002F23G100023AD20003GGGA0000CD710001G6000005E2000001DGA00008EDE0001F55F0007C09B00"
    "012BFG70004FG910000AB000001F7000008DC30006F79C0000007B000004F300000AG90000004F7000B21F70008GGC00"
    "00ECCD0001G8860004F8400002CCFD1000001D8000000B7005E47F2001AGF50000003E300001EG50019FGG4004C73G40"
    "00004G4000004G4000006G4000005G40003C810000EGGF1003F21C40069007800780058004C0096000FB9G20003BF700"
    "003D910000DEFD0002E12D40048005800480048004A0058000EBAE50004CD90003FG60000BFCF0000222G4000000G400"
    "0005G100000BF41001AGGGB004GEC83001FF200007ED90000996D0000108C0000008C000000B6000007GGG7000GFCC30"
    "0008GGG6006E58G2007406C000000C60000BGGA0000CG8000006G000000C90000004EE10003ECA4003D4086003F92F10"
    "002AGD000000CE400002C9300002GE0005GF30000BEBB00008B4G0000004D0000008C000000D951001BGGGA005GE8610"
    "00BGA10001FEFB0007E14G3007D00AB009C008C005E007D001GA5F80007GGF0000018G20005DGG000BGFCG0003818G00"
    "00008G3000008G4000007G700000AG8001FF300008FCE0000886G0000008F000000CC000001GAA5001DGGGB003GC8510"
    "000D100000AC100000E3000004E0450007G47E7003E004C000AA4AC00019GE2002AGG2000AF9G4000536G200002FG500"
    "001AEG3000510DA000GDAFB000BGGD30008DB10004F5C6000000A4000006G4000005DF30001007C001F87CC0006EGF50"
    "003DGGD000BE8F9000352E2000009B10002FFG90002FE820000BA000002F400001BGG40007G8EB00000AG600000FG600"
    "00008G2001500E9004GABG6001DGGA0001CGG90002E59E000001CB00000CG60000028F5000200B9004E44E6000FGGB10"
    "000AA000006F300000F6510007F2G3500BB6GFA00CGGG810048DC000000D9000002C1000006D000000D4000000G10000"
    "05GGGA1002F61A8000AA0990002CGF10004F1000009A000001F2000004C0000008E9861007E75C8002G41C60005EGB00"
    "002G8000008F500002G7000003G7510007GGGF3005GC4AE000ED5AF0003DGG700006E000004F400001D9470007D1DA60"
    "0EE8GGA007FGG7100006G000000AD00001AD920002C4CA0000E5BB0000288F2000000C50000004C0004108B000BGGE30"
    "00019G70004DGG2008GFDG3003708G2000008G5000008G4000008G800000CG700078684000CDCC5000D0000005FC9200"
    "03878F200000068000601D40007FF500007GF10005GDG80009B04G400C800BB00B8008C008D00CA002G9CF30008GD500"
    "04FEB20007A1BB0001D4DG20003B7960000005800000058003C03D5002DGG80000BCDE4000D8442000B0000005C63000"
    "05CCDB0000200D0004B03F00009GG60002FD10000DCE70000866D0000005F000000BA000002G500000BGDEC003GE8870"
    "0029DC2001ED7A6000D81770003DEE000000FF1000095850000D4D20000DF60004GG30000BEBB0000B72G1000003G000"
    "000AC000003G853000CGGGG003GF874000AD500003GGGA0008G16G5008B009C00A8008C008B008B003GA8F90009GGA10"
    "002BA10000ADED0000D00E50039009600590058006C0084000EB5E10003DE50000006G70015BGG800BGGDG8003714G80"
    "00005G8000005G7000007G9000008G80002DG90000CC7G3001E30G400004AG60000DGG900005D100000B9000001G4000"
    "000E4000006D100000F4000004G7420008GB9F5005E10A9000BC5D50001DG900019FD40005C4A6000003F200000FD100"
    "00029E2000000B8000A64B70008FG91005GD100009EE4000097C4000000D4000002G1000007D000001FGGGB005GEA860"
    "0003CC20007FGG0004F9EG300200EG000000EG000000FD000000GE100003GD20002DGE1000BC7G3000932G3000009B00"
    "002BFD30004FGD30000E8000005F40000007D000000E600000AA260003G39D200BC6EGA00BGGGA30028AG1000009D000"
    "000D3000006F000000C7000000GA710006GCDG6000G406C000CA2B90001DGF3000DGG50005F6BD000022D800004GF200"
    "003BFG5000002FB000349G6000FGGA0000009G400005FG2003CGGE000AGFGF000140GD000000FD000000CGC00000CG60"
    "00BGC20007G6AD0000203G000003C900000AGC0000303F7003G76E80019FGC10005DE50002F6BF1001G58G40004C9D80"
    "0000088000000B7000775F20005FG70000005F300003FG4003DGEG1002748G0000008E0000007G1000009G6000008F20"
    "002DGD40009B9G7002F22F2003308D20001DGGA0000BD510000B6000003F2000000CA000004F700000F4000001G71000"
    "04GEGD1001G01AB000E918C0002AGG50003CG90000C9DG9003G508C0009GAD200004GC00000B9G00001F2C00002GG600"
    "000A6000004G230000D87E0007F0DE500EFEGG900DGFG6000019E000000EA000005CD30004G98C0002305B000003BA00"
    "0006EF30000007B000A649B0006GGE2000005F600004FG4003BGAG4004B30G4000001G4000003G3000005G4000006F40"
    "000E8000003G300000C9970006F1EB600DE8GG7008GGG300001BE000000EE000004C500000CEF70002E12G0004800A40"
    "0780068004B0058000EB3D50002BGB00009CCD7000F5542004FA400002BBFB0000000A500000077005B45E10009GD300"
    "008FC40005E4B7000001E300002FE1000008DB0000000D5000C23C7000DGF800000A8000006E300000B8000003G82000"
    "06GGGF3000G208C000BC5BC00018GF2002BDB20007C4D80006D5ED00003B9B5000000880000003B0002019A001FGGE20"
    "0007F000006F800000D9000002G5410005GGGC3001F418C0008E55F00006GGB00001AG80018FGG900AGDBG800140AG40"
    "0000CG000000CG000000CG300000AG70003DGF6000DD9GA000G90E6000E26F000005FF60000GFA20000DB000004G7000"
    "0099CC0000EA830000D6300000DGFC2000000590000002C000512B8000AGGB100009A000003G400000C8270004G3DD30"
    "0ED8GGA00EGGG9100249G1000009F200002F5000009F010000E9990008G4GDC00DGGGF70038DC200000EA000003G7000"
    "001CGGC0007GBC9000670E4000006G30000AGG900008F5000008A000000G500003FG80000EDAG2000532G2000003G200"
    "0009C000001G8020008GEGF002GGFC90001AGF5000CC99A004G1077004ED8B000016GE100008BE50000C8F20000AF500"
    "01DGF50004G7EC0003C2BA000000E8000003G400001BD000009GEG7001GGFC5002FD200007GDF0000BB5G4000117G100"
    "000CB000004G882000CGGGB002FD641000FEF90000CA764001E2000005GCA40004B8BF5000000D7004GABE1001AGF400"
    "002DGG7000CFCGA000G90E6000304G10000AEG60003GGB200009E000002F600000A8840008FCEE0009B0AG40019CAC80"
    "0000088000000A7000B64F4000DGG70001DEGE3004E8730006B0000005GFB5000277AG0000003G000075DB0000FGA100"
    "000D9000004F300000B9640005G3D8100EG9GG900CGGGB30004CE000000CA0000018FB3000BC9EB002E00D6007F8C900"
    "006DG800000D9F40000G8E30000BF800002BEC3000EE9F8005C05F2003GBF300001EG400000F5F00001GAB00000FD200"
    "0007G200000FB00000BE650004G7ED200AGDGGA008FEGA100009G1000009F100006GGB0001G88G60008GEGB000143A80"
    "0000097000001E100047B900009GA100005C910000EEDD0003C11D40078006800880058005A00B4001F9BD00007FC200"
    "0029FC5000CBBCB001G108B003FCAF20001BG900000BFC00000CF800000AD200009DFA1001F57G5000F7AG6000277A80"
    "0000088000000B5000E6AC00009GC100001AB20000CC8F4006B01C7004G7FC00005FF300000E7E00004C7A00001GG300"
    "004GF20000BGDD0001G81G2007G60B8007G40B8004F11F7000DCEF10003EG600000EA000003GG300007GG70000CGG500"
    "004FG600000DG000000EC000000AA000005D700000CCE20000C0C6000061F3000006B000005E300000BG82630048AGC1"
    "004GG9000019AG100005FG10000AG5000002G6000000AA0000B8CE10005DGF00001F6000008G200000FB074008GA6G90"
    "06GGGG40005BGD00000CF300000FB00000BEGA0006F8640005C200000CGF100003BB6000000CA000005G900000DG3000"
    "0000D1000007F300000GB200004GGE10005G88A0009G40F00029BDE00000AGA003DGD00009D8G510008EGG50008GF200"
    "002G7000007G400000F9000002F300000018D100006GG90001FGGA0006FE60000376600001A2B000004BD2000005C500"
    "00019E70005E98A002EGBD3003GGGG5000671B7000001D30000068000000A000002GC10000BFDB0002G90E2004GC0B50"
    "04G60C7000F11F9000A9AF20002DG800001FE10002DGG30005GGG40004GGG100007GD000005GB000004GA000002GB000"
    "002AC20000BGDA0000972F0000323F000000AA000027G700009GGGG3003D9840003BDF3004GEBG800250EF100000GB00"
    "0000BA0000008C00008BF800002CE300001C7000008E100000F7035005G04F4005GGGF2000BCG8000005G300000DA000"
    "004DGE0002EGC4000DG500000BGA100005FG5000002F9000005F9000004G500000069000002F8000004G5000009C7C20"
    "009GFD6000DE2D6000EFDG40001AGA000007GGB0006GGGG000BGGG900029BEA000000A6000004B100002E200000B3000"
    "005GE10000EEE90001F61C1003G10A4005G50B2002G23G0000BDEC00003FF500002FE10000BGG40004GGG10007GGE000"
    "09GGB00001DG9000005G5000002E9000002CA00000BEE90003F1A9000270A8000002G200000AG600007GDEG4004F0054"
    "00AGF70006G6AG200865FC00000DG2000005G4000000AG000001BG1000BGG810003F300000EG100008G608500CE05G80"
    "0CFEGD0001BEG500004FA000004G500000AGGE0004GEA8000DG810000CGGD2000389G5000003G600005CF20000CF5000"
    "0001D100001EF000003G6000006C0000009EA300008GGG10008GFG500002BB1000AGE20000DDEB000048FF4000AGGD30"
    "001CE100002G800000DC100000D70000005CGF0003G89G0004GEG70005GF500008F60000048E000003AG1000006F2000"
    "0007CGGF009GA4GA00EGDEC1004GGGC000000GA000007F000001F700000C6000000A9000003FD50000DD1D0000G70G00"
    "00GB3F0000E7GC00009DF600000DA0000004BFF201AGDEE205GGGGE000988F9000001G200000AA000001G6000003G200"
    "007FGG1009GGA5000EGGF0000BEDG2000006G100000CC000006G700000AD000008DFGG8009GGDB5006GC000001EE0000"
    "008G2000008F000003EB000009G60000000C5000002F7000007G800000FF840000FGGF3001GD4BB000BE9FB0001EGF60"
    "005FED2000CF971005G8000009GG700006CE7000000B6000002G3000007E0000002ED30000DD9B0000G70C0003G50A50"
    "05G1085003G10A5000G85E30004GG9100004CGB000FC059004G56F3003FGE100003AG2000000E2000000C0000004C000"
    "0009GA00001F5G3000D40F5000FBEG2008GGD50003FF1000009GA000000AF000006EGF1009GC9G300CGBED0007FGE000"
    "0028G5000006G400002DC000009G10000008F400003GAB00006CBD0000AGG90001GCB50002D0290000862C000019E900"
    "001D8000007G300000E9077003G32F9009G8CF0006GGG700003CF100000D9000000D9000000EF100000DG000000BG000"
    "000AG200000EG100000FG100000CF000008FGA00007AAF0000007D000004EC1003GGGC4001AG70000089000000D10000"
    "02AGC0000CECG5000204G710004FGGA001GGC52000FC100001E4000000G3000002GGGC000195CG200006FE20001GG100"
    "000CG1000006G600000CG50001GGD10004GGGF300BGE88100CE3000008G4000002G9000000AC000001EB000005G30000"
    "000DE000000DG300002GF300004GE000003GB000008GA000006G7000001B9000000GC100006GE70000EF1B0000GF0E10"
    "01GA0E2000FD3F30009GGF00000DG800009DB10000649E1000150B4000DE075003E10A4003E02F1002D8CB00008EA100"
    "005GF500008D9F0000040F5000000C6000000F4000BAAF0000GGGFD4007GDA8303CG90000DF8F2000B60C4000100F300"
    "0004G100000CB00000BGA46102FGGGG302FG5000004B9000000D7210018GEGA00AGF710000E8000001G3000002F10000"
    "007FF60004GGBF0007GAAG1003BGG60001FGA00005G5E00001D3E100005FF200001FD2000008EA0000005F1000002G50"
    "00008F10003ADD00008GGC40001DFEG7000CB100003GDA0000891C0002G90A5004G8078001G30A70008D9G60001AGD10"
    "000FB000006GG20000AGG10002GGG30007GGE000003FA000000F7000000E400002DGC00009FAG3000575G300000AE000"
    "005G700000EG137103GCAGB100DGD71000087000002G6000005G200000BFC90000BGD98000BG2890003G5CA00006GE20"
    "00BFGA0008G8FG00056AG800004GB100002F90000009G2000008G50000DGF00002BEE90003A7AG300004DC00000DF200"
    "000F90000009F000001D900001FD100002DGF2000FE7G5000A12G400001BGF8000FGD82000AE000000BA000000F30000"
    "009GGA0000999F0000006E000002F700001EG400005GG8000006G40000BGC000008GGD0000AB9G200004GC00002GF100"
    "002FB0000004G30003C2E400009GG500005G100000CC000002F8065009G6CG9007GGGF10003AG600001EA000005G2000"
    "000B8000005G700000AE000000C9130000EEFG7000AGFCC0006GDEC00009FF300006C000000DD000007G200000AC0200"
    "00DEGE0000BGED60005D9G500006FC100009B000001GB000006G100000BB671000DEFG8000CD55D0006E8FC0000AGC20"
    "00AE000001G7170000F7CG2000AGG4000009E000000EA000005G200000BC000000029D6000BF89A003GA4D5001FGFF70"
    "00001E100000B6000001D00000054000000E7000000FF100002GF100006GF000009GD000008GF100004GG600000DC000"
    "00CGGF3004GG62100EG4000009GG5000007F8000000CB000005G700000EF000000098100005GG80004GF1F0006GC0C10"
    "05GB0B6001F84F60005GGF000007E900001DA10000C67A0000AABF00001EGG5000000AA0000005B000244EB0002BFG50"
    "005GG300009G700000CF200001FGF400009DG9000000EC00005CG800003FF100006GC100005GDA0000055F0000008F00"
    "0000DD000006G941003GGGGA005GB962000AG700002F4E20000D8G00000AGE10008GG70001F68C0001D5C900001BF600"
    "004FG60000GC8F0007G40B500AF008900AE008B006G40B9001F78G50003EGA10000C9000002GG000003GG100004GD000"
    "003GB000005GA000002GA000000BD000007EG50000GCFC000030E900005CGFA008GGD600039G600000AC100000C50000"
    "00087000004GB000009G100000BEBD2000DGEEA000AF15D0006G8EC00005EG4001BGGC0008GDGG300157GE00000BG400"
    "0002F9000000BD000037FE0000EGG60002DG70000CDED0000208C000000B9000000D5000008F200000GGG92001GEDG90"
    "000B9000000BE000000BD000000FD000000DD000000D9000000AA0000009B00001BGB0000AEBG0000E56F000031BE310"
    "02DGGG9002EG542000BB000000G30000005D000000C94D0000G5BD0000FDF700004EF000000E8000002G4000006G1000"
    "0008A000003F5000007D0000007E5100006GGG30006G7D80002F7F700007FC00006GF500002DED000002EE100003GA00"
    "0000EA000000AE000087CG00006GGC10000C7000000EF000000EG100000FG200000DG100000EG100000EG1000006G200"
    "006FF40006GGGE0007GEGD000037G6000002G9000000EF00007AGE00007FF4000008AE3001DD9C8006G88G4005GGG900"
    "0058EC000003G500000F8000001C2000000GB000002GG200003GG600003GF200002GG200004GF000001GF100000CG200"
    "04FGF4000BGEFG000330GE20009GGG8000FGB10000BD100004G5000004F0000000098000001G2000006E0000009B0300"
    "00D8DDA000CG80D1006G59D00008FE400009F900008F5C2000FF3D3000BGGD0004GAF00003C0870000C8AB000009D400"
    "000E5000005G500000DC013004G51FB00AF4DG3008GGGA0002BCF100000G9000007FGA0000E9AG100025FE00000BG500"
    "0002G8000000AD0000B9FG10008GGC00000E9000000ED000000BG200000EG500000DG400000GG400001GG000000EC000"
    "000F5000004G700001DG092005GB5G9007GEGG7001BFGA00000DG300001GB000000AD300008GEC0003GD0E1005G60E50"
    "06G00F4002D15G4000AGGE10002BD600007CF6000EGF60000GGD00000AGE80000028D000000AF000004DF000007G7000"
    "008FG60000DDDD000026G9000003G2000000AA0000005F000074BG10007GG8000005D100001FC000004G500000BE3000"
    "00BGG40000BB5D00006D7F000005E900007GF40000BGFC00005GGE0000038F5000000AA000000BB000105F90006FGG20"
    "001DG200008GC10000EG200000FE910001GGGA0000DFDF00008GEE10001BG800000CA000000EG200000DG000000BG300"
    "000AG300000BG200000EG200000BE000003GF500007GFE0000017G400269EG5009GGGC10009FG400006GB000002F4000"
    "00FDDD0000GGB30000CD0000005G3000000BA000000AE000009GA00000BF1000000D8000002F100000BA082004G5BG80"
    "07GGGG3002D9GC000007G600000DF100004G100000CD011003G85G6009G6EG200BGGG90000AFF200003G9000005G3000"
    "005EE20002GGG7000074GC000019GG8003FGGA2004GGB000009G5000009D0000007G500000GGB00000ADG100000DF000"
    "000ED00000CG648100EGGGG4007GF730008GGC0000GDAG3000C12G4000006F000001FA000009F20001BGC88100BGGGC1"
    "0039E90005GE50000CB300000DGC100004BD80000007B000001CC000002F700007CEG80008GEFB0002B2G6000009G850"
    "08DGGC5007GC300004G4000009C00000007GG80000ECBE0000BFGC00005FF4000003CE0001A07F0001E6DC00007GGB00"
    "003EGE0003CG81000FGC00000AGG8000007BF1000007G100008FG200004G900000B7000005G32E3009F0CF0006GFG500"
    "006FB000001G4000009C000000DA0000000B8000006F200000D8047005G22D900AFCFE1006G9G5000006E100000E7000"
    "007FGC000CGBGD000FGGE50008GC0000002C90000009D000002G800000AC1000001DF80000BE8F0002G30D2005F00A50"
    "03A00A5003D01F3000CABB00001CB400002AB100005E3C00006D3F00008FF90002GB900002E2A0000076D000001F6000"
    "001ADC5000DD44C003G74C6002FGF5000019G0000002F000000B6000000F00000019FA10002C8C40000B1B3000088F40"
    "02FGG70002F5B00000E4C000003E9000008CC10003GGE90006F93C20079009700780078005A0079000EDAG60005DB400"
    "004EGE1002EGG80004GGE30004GGA00000CDC00001EGF30000AGGC000029FG8001CG50000BGGD0000765E2000000C300"
    "0004D000001D500000AGA84000DFGC70016CF50007EEG700002EA00000BG2000002BGC0000004E7000245E70006GE800"
    "00008A000000D6000005D000002E3AA001EFAG600EECFG2003008E0000005A00009FGF2004G5310004E0000005E9EF20"
    "05D98F8000000D500005BE0000BC7100001D2000009E200003G7000003G7000005GG810003FBED2000AGAGF0001AEC70"
    "007GGF50009CFG7000009F10007CFF8001GGGD50000EA000005G2000008E100001BA811003FB3C60004GGC00000BG500"
    "005DCC0000D71G4001F47E0001EE8100018DF50008E7GE000AC1AG2002CEFG4000044F800000099000971AC0006DGF60"
    "004F800000FEF50008G53E0005B00A500590088000E00A8000EDDG10002EE7000008C920005GGG40009GGB0003GGG500"
    "04GGG40001FGG300008GG9000009C600008G800000AGG3000024E4000008E000005G800002FE763005GFGF3000AD8200"
    "018DGD0001DCFG000005F800005F5000006GB100002DGB000002EG4000DGF7000006C000002F500000C8026004F01D80"
    "06G26E1008GGG6000158G1000003B000008EGG0000ED880002G6000006GDGD0003GGCG7000412E600016GB0000BF8100"
    "002F600000BG400003G7000004G6410006GGEG3002E90B9000AE8F50003DG800004GGG30007CDG8000001G5001447G10"
    "0AGGGG9005BDGA20000BD000005D300002CE300007G1041000DGGF10007GE10000FEG00002G1F70005G6F70001GE9000"
    "008EC30006G6EE0006D08E0002EEEG3000246G5000000G5000005G30007GG800007C100000FGF40002G9AB0006C00C30"
    "08C0068006D0098001GDFG30006F9300006CB00000CGF00000DGE20001FGB200009GA000009GE50000AGGE00004BC800"
    "00AD810000GGG8000061B9000000D8000005F400008GA00008GGGF4002AB720004DGG70008CGGD00009GG30000FG6000"
    "00AB92000017FD2000347GA002BFB8200002E200000E800000A9044004E11F8004G5BG2006GGGB000040C6000001D100"
    "003AF80000CE810001G3000002G9BG3004GE9F7001400F300003C800002A8000001C600000CF000004GA000007GA1000"
    "08GGF70006G99G30008GDFB0001AFE40005EGG30007GGG5000008G00009EGGD002GGF710001EA000003G5000007D0000"
    "00FD033000FF8F50008GG700007GG10000CCFA0003G0AF1002G57F3001CGF700004DD40000GAA80000E76B00006FFG20"
    "00000B500000079001446CA0016BFC10007CD20000ED8D0003G10B2004E005800580058004G02E7002GAEF10006EE400"
    "005EB30001F8DA0001F99F2000AGGG3000001G4000000F4000759G00006CD90000FGC50001GFB70004G9000008GEC700"
    "07GEAG300010AG40001AGA0000DF50000049CG8000FF882004GB410008GGGE0000B98G0000007G000008GC00003D9100"
    "004E500000DE000002GA000004G7000006GGF40004G94G2001FD6GB0004DGF50007BD81001F986000AG0000008GGG900"
    "0065AD000001EG00006EE40001AE2000004EB30000AGCE1001EC0D3005G6086008G0098007G37G5003FDGF20004FC200"
    "00CGE80007GAEG0004GBEG40005EGG8000000G8000004G6002C9GF10019GE300007EB00001GD221003G94D40007GGE00"
    "00BGG90000G9AF0001G25G40007FGG30009GE60006G5AG0002F7AG300048CG4000000G7000001G8000308G1000AGD400"
    "01FE200006E0032002G32D3000BEF900007GB00000FDE00002F4G30001FGC1000005C021001E41E800A809F101F12F80"
    "05G6BG2005GGGA000010F2000005B000003EF90000AGGD0002DGG40000CGG40002DGG40000CGG400006GGG60002AGG20"
    "003CGGF0009A7CE000002F600000BD000199GB100DGGGG40001G7000006G2000001BGG80005B9GB000002G600069CG90"
    "01GGGE300035G7000008E000001G5000008EGGF100665CC10002BC30005E9000009G9000001BG7000027G700009D5000"
    "008CFG5000AB230000D5000002GACB1001GD8E7000100D300016CA0000AA70000017A300008GGC00008GGC0000AGG500"
    "007GG10000EGF10000CGG1000019C90000ACE10000GGGC0005G83G0008D0087008C0068008D04C8007GGGD0000BE8100"
    "005C160000BC0G2000G50C4003F0084007C0047002F11C5000GBCF30004CC30000D9000008GF0000099D2000000B3000"
    "001D0000004D000001DF8CB000CGGC2005FG60000BGGB00006ABE0000007F000000BB000003G600000DGFCB006GGGD30"
    "007EG80000EEGE000000AC000044E92007GGGG7006CGB100002G3000006D0000006E952007F62C8005F28F1001CEG400"
    "001GB000004AG3000092D800005EB30004FB100008GG4000026D800000085000000B4000005G000002DGDC6005GFGC30"
    "009D800000DGGC0002G76F3008E0083005E0088002GDBE4003GFG600006E8000005BC50000C62300009GG40000CGG400"
    "00CGG40000CGG40000CGG800006CB70002GA000007GG300003AC80000007A000000AC000008FFC5002GGGGF202FECC70"
    "001D9000008G400000GB000002GA200007GGGA1004G62E7000BFCF80002EF600005DGA1007GGGG700052BE50000AF600"
    "009GD200004BFE000022DG10005EF900006BGD5002GGGGC000005G40000AF500009G300000DGD1000005GE00005EB600"
    "002EG800004CGB000000GC000003G900025AGC200GGGGE30044EC000002G7000004CD100004GG500009GA00008GGB400"
    "0048GG7000002EE00004FGB0005GE800019GGC100078AG9000009G40005DD30000DG8000000BG8000035EF0000AGB400"
    "0002E000000C9000008C00D500D809E004GGCG4004CCFC000001F4000004A000004G6000007G500000CC100000G80000"
    "04GB200005GGGD1002GEFG50005FE700005G500000CE100000FA000003G9100007GGG90001GA8G6000CE59D0004FFC30"
    "003E100000CC000003G6000005G2000006G2520004G2CF2001ED2DB0003BGD400001F2000006E000000B9060006F1BF0"
    "05GEAG801FGGGG300375DB000000F30000AG910007G9EB0008E17E2002EEEF3000244G4000300D9002F88E80008FDA00"
    "00BFC100007GG70000CGGG1000DGGD2000EGG40002GGE00000EGE000008GD100007CG90004G6730004G2830007GFDG30"
    "05B11G8000007G00000AG60000AB400000AB700004GGGA0004G65F2008C0058008A0058006D15E5000EDFB10007C8000"
    "008GB00002F8G70003D1ED0000AGGG3000025F4000000C6000565F40006FGC10003AGC0000DC020004G2000000GEGE20"
    "06GC5G5001C10E700003DD10001DA10004FF800008GGG3000101F5000000B6000003F200004FGE6006GGFB3007EB0000"
    "007CA00003GGG910008GGB1000AGG00003GEG40004D07F0004E22G00006BA50002BGD2000BFCG7000760E8000001G600"
    "000AA000007G433003FGFFB002DC9000007E840000G8FE1004G4084008E0044008G0045003G10B4000FGGC00006D7000"
    "009F600002GGG70004E5BD0007C00C4008B0075004D11A6002GFFE10008FB400004CC70000GGG50000GGGG0004GGGC00"
    "04GGGC0003FGG90000CGG800017CB500006FE10000DGG2000038G200026CG7200DGGGG900ADG7100006E000000A80000"
    "000DC000006G400002GA000005GA000008FF600003GEDA2000CGDGC0001AGE40007GGF8000CFFGB00003EF20001EC100"
    "001GF5000003CF000004CE1000AFA40000BGA00006FGG6000002BC00000098000004F200019F930000GGGG7000AD8410"
    "004AC700008GGF00009GGC00007GG900002EGB10000GGG00002GGC000019A000001FF200003CG6000004G4000038G400"
    "0AGGGG8008BEE510000F6000001F20000000D8000005G300000EA29001BD0AF00CF57EA01FGGGG400443AE000000F700"
    "0008F300001FB20000DG100003GE000003GF500003FGBE7000BG66F0000AEC8000AFFB4001A57GA00001EE00000BD000"
    "0005G5000001AE0000027F30006BG800004GG800006GGF10004GGC00003GGF00008GG60001DGG40003GGF200006CC200"
    "003DG50006F9F7000006GA00007EG300009GGE3000032FA00045CGE0005DE820007G982005GEGG4008E06G4001GGFG60"
    "00044D8000000D8000C9BG70007FE700001CA300007GG70000CGG30000EGG20001FGG50000FGF20000BGG8000017CA00"
    "001AGG10009GDG1000005B000003CC50007GGA40003BD000000B5000000F0000002DD10000CG900000GB000004G80000"
    "06G9300003GECD4000EA0AF0002CGD70005CD40003GA259000FEBF30007GF100003GG400008EDC0000CCDB00007GB200"
    "0003D700001EB00000CC123007G41FA00AE07G800FGGGG1004BBFB000002F400017DGD0007GGGE00017GA10001GF0000"
    "008FE3000001EF300015DG70008FA600008CB600008GGD2002EGGE2002DGG80004GGG80004GGGA0001BGG800004BC700"
    "0002G1000009C000004F900004GC09C009GGGGA0016AEG400000EE000003G700005GA000008GG50000EE1C0000FA0740"
    "02G7029002G806B001CEEG50004FG810009CE60000G6000002F0000008FCG91001862C7000000B7000008F2000CE9200"
    "02ACG8000485DG000007F700006GA0000005GB0000006G300000AG5002EGC9000006C600001FE10000AG800001DG0000"
    "03GGB40000GGGG70009GGGC00006BC50005EB80004F2GG0008C0CG0002FGGF400004AG2000004G2003D8EG00007FC500"
    "002DA00000AD000000G6000003G8200007GGGB0004G24B9001DB8CC0001CGE40006CC60000BGGD0000CGG800008GGC00"
    "02DGGC0001GGGA0000GGG800002BA400006GG300008GGC000004FB00006GGGD000BGG510000E7000004G100000BB0000"
    "00CGG70003GA220004G5000003GCC91001FGCF9000003EB00039GG7000ACC4000002E0000004F000000BA57000BF2D70"
    "0AG88G6008CCDF100000AA000001D3000001D8000009F300002G921002ED1G600BG68G301GGGGD0007CDGA000000F700"
    "003AGG4000001E7000002F400044CF5001FGG940002BD000001G5000003C000003EF600007FEF0000272E3000001E400"
    "0007F200005FE41004FGGG6004FDCB1000AGE50002GG8000009GG500007GG30000EEDB0005G16F0007E9DF1001BGF600"
    "01AD20000AGGC0000998G0000006G200001BF000004GD20000EGGGD0009DBA9000FD100000EE40000014C0000006C000"
    "000BA000001G865000DGGGE000ADA620001AED10008C640000E4000005GCDC0002BB8E4000000G4000006F20000CE400"
    "01AGF20001CDG4000000G800007BGD8008GGGG6002AG9000003G400000AF2000004EF60005GGGG0005GGGG300028DG50"
    "00008G6000004G800016DG60004DF90000AGF10000GC500002G9400004GGGE2001A41G4000002G700078EG30006DA400"
    "0001C600000BF200008G612004G91F900DF6AG600CGGGG100174ED000000E900008G301000GE5EC0008GG900003GE100"
    "00CGG20000GBG40003GGG60000AGA100005C801000BG5D60002FGC10000AG600001FG700008GGB0000BGG900006CC300"
    "0003F400004GC00000CF343007G53F800DGDFG200CGGGD000045G8000001G400004AD60001GECG3004G63G4000CGGG50"
    "00044G8000000F5000577G40002EF900006GDB1000GFCG1003G70D6004G00A8008G00E6005G79G5001FGGG10006GE600"
    "001BF10000DG821000GFAG50008GG700009GG40000GEGF0000FFFG000029D600002A700000EGGF1004G73G7005GA7G40"
    "005EEG4000000G2000477G20005CGC0000AE810002GE610000FF8F00005GGA0000CFFC0004G64G6008GA8G80018CEC10"
;

extern const char* const kDigitsLabels =
    "012345678901234567890123456789095565098984177351002278201263373346664915095282001763217463139176"
    "843140536961754472822579548849089801234567890123456789012345678909556509898417735100227820126337"
    "334666491509528200176321731391768431405369617544728225548849089801234567890123456789012345678909"
    "556509898417735100227820126337334666491509528200176321746313917684314053696175447282257954884908"
    "930123456789012345678901234567890955650989841773510022782012633733466649150952820017632174631391"
    "768431405369617544728225795488490898012345678901234567890123456789095565098984177351002278201263"
    "373346664915095282001763217463139176843140536961754472822579548849089801234567890123456789012345"
    "678909556509898417735100227820126337334666491509528200176321746313917684314053696175447282257954"
    "884908980123456789012345678901234567890955650989841773510022782012633733466649150952820017632174"
    "631391768431405369617544728225795488490898123456789012345678901234567890955650989841773512782012"
    "633733466649150952820017632146313917684314053696175447282257954490898012345678901234567890123456"
    "789095565098984177351007820126337334666491509528200176321746313917684314053696175447282257954884"
    "908980123456789012345678901234567890955650989841773510022782012633733466649150952820017632174631"
    "391768431405369617544728225795488490898012345678901234567890123456789095565098984177351002278201"
    "263373346664915095282001763217463139176843140536961754472822579548849080123456789012345678901234"
    "567890955650989841773510022782012633733466649150952820017632174631391768431405369617544728225795"
    "488490898012345678901234569012345678909556509898417735100227820126337334666491509528017632174631"
    "391768431405369617544722579544908980123456789012345678901234567890955650989841773510022782012633"
    "733466649150952820017632174631391768431405369617544728225795488490898"
;

} // namespace dnne::io::detail
