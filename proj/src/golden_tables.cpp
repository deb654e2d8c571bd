#include "golden_tables.hpp"

#include <sstream>

namespace mapcensus {

// Transcription of the four published tables: rooted r-regular maps on the
// torus, projective plane and Klein bottle, and sensed r-regular maps on the
// torus, for r = 3..6 and table rows 1..10. Columns here are
//   kind surface r vertices count
// with vertices the actual vertex count (2*row for odd r). Data only; do not
// edit by hand without re-checking against the source tables.
static const char* const kGoldenTsv = R"(
rooted torus 3 2 1
rooted torus 3 4 28
rooted torus 3 6 664
rooted torus 3 8 14912
rooted torus 3 10 326496
rooted torus 3 12 7048192
rooted torus 3 14 150820608
rooted torus 3 16 3208396800
rooted torus 3 18 67968706048
rooted torus 3 20 1435486650368
rooted torus 4 1 1
rooted torus 4 2 15
rooted torus 4 3 198
rooted torus 4 4 2511
rooted torus 4 5 31266
rooted torus 4 6 385398
rooted torus 4 7 4721004
rooted torus 4 8 57590271
rooted torus 4 9 700465482
rooted torus 4 10 8501284530
rooted torus 5 2 120
rooted torus 5 4 125280
rooted torus 5 6 120800160
rooted torus 5 8 113579366400
rooted torus 5 10 105549958379520
rooted torus 5 12 97452182769223680
rooted torus 5 14 89611995665911173120
rooted torus 5 16 82178813933957614141440
rooted torus 5 18 75217069050598359088496640
rooted torus 5 20 68747100051073934332046868480
rooted torus 6 1 10
rooted torus 6 2 800
rooted torus 6 3 58000
rooted torus 6 4 4080000
rooted torus 6 5 283100000
rooted torus 6 6 19496000000
rooted torus 6 7 1336380000000
rooted torus 6 8 91320000000000
rooted torus 6 9 6226591000000000
rooted torus 6 10 423871680000000000
rooted projective 3 2 9
rooted projective 3 4 118
rooted projective 3 6 1773
rooted projective 3 8 28650
rooted projective 3 10 484578
rooted projective 3 12 8457708
rooted projective 3 14 151054173
rooted projective 3 16 2745685954
rooted projective 3 18 50606020854
rooted projective 3 20 943283037684
rooted projective 4 1 5
rooted projective 4 2 38
rooted projective 4 3 331
rooted projective 4 4 3098
rooted projective 4 5 30330
rooted projective 4 6 306276
rooted projective 4 7 3163737
rooted projective 4 8 33252050
rooted projective 4 9 354312946
rooted projective 4 10 3817498004
rooted projective 5 2 215
rooted projective 5 4 106820
rooted projective 5 6 65476730
rooted projective 5 8 44355884860
rooted projective 5 10 31871222091735
rooted projective 5 12 23809740820038860
rooted projective 5 14 18286634336378438820
rooted projective 5 16 14338651143931504204140
rooted projective 5 18 11425366917170617116755180
rooted projective 5 20 9221856681066077433854516240
rooted projective 6 1 22
rooted projective 6 2 864
rooted projective 6 3 40512
rooted projective 6 4 2075860
rooted projective 6 5 112225776
rooted projective 6 6 6289396632
rooted projective 6 7 361699896960
rooted projective 6 8 21210328632420
rooted projective 6 9 1262859239910000
rooted projective 6 10 76114899842912520
rooted klein 3 2 6
rooted klein 3 4 174
rooted klein 3 6 4236
rooted klein 3 8 97134
rooted klein 3 10 2163636
rooted klein 3 12 47394444
rooted klein 3 14 1027091736
rooted klein 3 16 22094309934
rooted klein 3 18 472740763236
rooted klein 3 20 10074173087364
rooted klein 4 1 4
rooted klein 4 2 68
rooted klein 4 3 964
rooted klein 4 4 12836
rooted klein 4 5 165784
rooted klein 4 6 2103788
rooted klein 4 7 26396416
rooted klein 4 8 328621604
rooted klein 4 9 4068021916
rooted klein 4 10 50142879128
rooted klein 5 2 610
rooted klein 5 4 713230
rooted klein 5 6 730427830
rooted klein 5 8 714985017230
rooted klein 5 10 684597649115160
rooted klein 5 12 647152118916722050
rooted klein 5 14 606713944500089445300
rooted klein 5 16 565552162701658630787310
rooted klein 5 18 524985730432063320579176680
rooted klein 5 20 485790080943651818443229561080
rooted klein 6 1 42
rooted klein 6 2 3846
rooted klein 6 3 300048
rooted klein 6 4 22171638
rooted klein 6 5 1595739432
rooted klein 6 6 113110095540
rooted klein 6 7 7939173652032
rooted klein 6 8 553477015433958
rooted klein 6 9 38395171272416568
rooted klein 6 10 2653558455501023196
sensed torus 3 2 1
sensed torus 3 4 5
sensed torus 3 6 46
sensed torus 3 8 669
sensed torus 3 10 11096
sensed torus 3 12 196888
sensed torus 3 14 3596104
sensed torus 3 16 66867564
sensed torus 3 18 1258801076
sensed torus 3 20 23925376862
sensed torus 4 1 1
sensed torus 4 2 4
sensed torus 4 3 23
sensed torus 4 4 185
sensed torus 4 5 1647
sensed torus 4 6 16455
sensed torus 4 7 169734
sensed torus 4 8 1805028
sensed torus 4 9 19472757
sensed torus 4 10 212603589
sensed torus 5 2 15
sensed torus 5 4 6423
sensed torus 5 6 4031952
sensed torus 5 8 2839677570
sensed torus 5 10 2111005408320
sensed torus 5 12 1624203259187196
sensed torus 5 14 1280171373413389056
sensed torus 5 16 1027235174396893007472
sensed torus 5 18 835745211680299639976976
sensed torus 5 20 687471000510964612782875472
sensed torus 6 1 3
sensed torus 6 2 81
sensed torus 6 3 3313
sensed torus 6 4 171282
sensed torus 6 5 9444158
sensed torus 6 6 541659909
sensed torus 6 7 31819176850
sensed torus 6 8 1902508129720
sensed torus 6 9 115307287484560
sensed torus 6 10 7064528615347192
)";

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = [] {
        std::vector<GoldenRow> out;
        std::istringstream in(kGoldenTsv);
        std::string kind, surface;
        int r;
        long long vertices;
        std::string count;
        while (in >> kind >> surface >> r >> vertices >> count) {
            GoldenRow row;
            row.sensed = (kind == "sensed");
            if (surface == "torus") row.surface = Surface::Torus;
            else if (surface == "projective") row.surface = Surface::Projective;
            else if (surface == "klein") row.surface = Surface::Klein;
            else throw std::logic_error("golden table: bad surface " + surface);
            row.r = r;
            row.vertices = vertices;
            row.count = BigCount(count);
            out.push_back(std::move(row));
        }
        if (out.size() != 160) throw std::logic_error("golden table: expected 160 rows");
        return out;
    }();
    return rows;
}

}  // namespace mapcensus
