#ifndef HOMREP_FIXTURES_DATA_HPP
#define HOMREP_FIXTURES_DATA_HPP

// Embedded character-table fixtures. Each JSON blob carries its own group
// presentation, class representatives and irreducible values; everything is
// re-validated on load (class matching, sizes, row orthogonality), so the
// data is self-checking.

#include <utility>
#include <vector>

namespace homrep::fixtures_data {

inline const std::vector<std::pair<const char*, const char*>>& character_tables() {
    static const std::vector<std::pair<const char*, const char*>> tables = {
        {"C2", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1)","size":1}],"group":{"degree":2,"generators":["(0 1)"]},"irreducibles":[["1/1","1/1"],["1/1","-1/1"]],"name":"C2","schema_version":1})json"},
        {"C3", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2)","size":1},{"rep":"(0 2 1)","size":1}],"group":{"degree":3,"generators":["(0 1 2)"]},"irreducibles":[["1/1","1/1","1/1"],["1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}],["1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}]],"name":"C3","schema_version":1})json"},
        {"C4", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3)","size":1},{"rep":"(0 2)(1 3)","size":1},{"rep":"(0 3 2 1)","size":1}],"group":{"degree":4,"generators":["(0 1 2 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1"],["1/1",{"im":"1.000000000000000000000000000","re":"0.0"},"-1/1",{"im":"-1.000000000000000000000000000","re":"0.0"}],["1/1","-1/1","1/1","-1/1"],["1/1",{"im":"-1.000000000000000000000000000","re":"0.0"},"-1/1",{"im":"1.000000000000000000000000000","re":"0.0"}]],"name":"C4","schema_version":1})json"},
        {"C5", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4)","size":1},{"rep":"(0 2 4 1 3)","size":1},{"rep":"(0 3 1 4 2)","size":1},{"rep":"(0 4 3 2 1)","size":1}],"group":{"degree":5,"generators":["(0 1 2 3 4)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1"],["1/1",{"im":"0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"-0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"-0.9510565162951535721164393334","re":"0.3090169943749474241022934172"}],["1/1",{"im":"0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"-0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"-0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"}],["1/1",{"im":"-0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"-0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"}],["1/1",{"im":"-0.9510565162951535721164393334","re":"0.3090169943749474241022934172"},{"im":"-0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"0.5877852522924731291687059546","re":"-0.8090169943749474241022934172"},{"im":"0.9510565162951535721164393334","re":"0.3090169943749474241022934172"}]],"name":"C5","schema_version":1})json"},
        {"C6", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4 5)","size":1},{"rep":"(0 2 4)(1 3 5)","size":1},{"rep":"(0 3)(1 4)(2 5)","size":1},{"rep":"(0 4 2)(1 5 3)","size":1},{"rep":"(0 5 4 3 2 1)","size":1}],"group":{"degree":6,"generators":["(0 1 2 3 4 5)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1","1/1"],["1/1",{"im":"0.8660254037844386467637231708","re":"0.5000000000000000000000000000"},{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"-1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"-0.8660254037844386467637231708","re":"0.5000000000000000000000000000"}],["1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}],["1/1","-1/1","1/1","-1/1","1/1","-1/1"],["1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}],["1/1",{"im":"-0.8660254037844386467637231708","re":"0.5000000000000000000000000000"},{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"-1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},{"im":"0.8660254037844386467637231708","re":"0.5000000000000000000000000000"}]],"name":"C6","schema_version":1})json"},
        {"V4", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1)","size":1},{"rep":"(2 3)","size":1},{"rep":"(0 1)(2 3)","size":1}],"group":{"degree":4,"generators":["(0 1)","(2 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1"],["1/1","1/1","-1/1","-1/1"],["1/1","-1/1","1/1","-1/1"],["1/1","-1/1","-1/1","1/1"]],"name":"V4","schema_version":1})json"},
        {"S3", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1)","size":3},{"rep":"(0 1 2)","size":2}],"group":{"degree":3,"generators":["(0 1)","(0 1 2)"]},"irreducibles":[["1/1","1/1","1/1"],["1/1","-1/1","1/1"],["2/1","0/1","-1/1"]],"name":"S3","schema_version":1})json"},
        {"D8", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3)","size":2},{"rep":"(0 2)","size":2},{"rep":"(0 2)(1 3)","size":1},{"rep":"(0 3)(1 2)","size":2}],"group":{"degree":4,"generators":["(0 1 2 3)","(0 2)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1"],["1/1","1/1","-1/1","1/1","-1/1"],["1/1","-1/1","1/1","1/1","-1/1"],["1/1","-1/1","-1/1","1/1","1/1"],["2/1","0/1","0/1","-2/1","0/1"]],"name":"D8","schema_version":1})json"},
        {"D10", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4)","size":2},{"rep":"(1 4)(2 3)","size":5},{"rep":"(0 2 4 1 3)","size":2}],"group":{"degree":5,"generators":["(0 1 2 3 4)","(1 4)(2 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1"],["1/1","1/1","-1/1","1/1"],["2/1",{"im":"0.0","re":"0.6180339887498948482045868344"},"0/1",{"im":"0.0","re":"-1.618033988749894848204586834"}],["2/1",{"im":"0.0","re":"-1.618033988749894848204586834"},"0/1",{"im":"0.0","re":"0.6180339887498948482045868344"}]],"name":"D10","schema_version":1})json"},
        {"D12", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4 5)","size":2},{"rep":"(1 5)(2 4)","size":3},{"rep":"(0 2 4)(1 3 5)","size":2},{"rep":"(0 1)(2 5)(3 4)","size":3},{"rep":"(0 3)(1 4)(2 5)","size":1}],"group":{"degree":6,"generators":["(0 1 2 3 4 5)","(1 5)(2 4)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1","1/1"],["1/1","1/1","-1/1","1/1","-1/1","1/1"],["1/1","-1/1","1/1","1/1","-1/1","-1/1"],["1/1","-1/1","-1/1","1/1","1/1","-1/1"],["2/1","1/1","0/1","-1/1","0/1","-2/1"],["2/1","-1/1","0/1","-1/1","0/1","2/1"]],"name":"D12","schema_version":1})json"},
        {"A4", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2)","size":4},{"rep":"(0 1)(2 3)","size":3},{"rep":"(0 2 1)","size":4}],"group":{"degree":4,"generators":["(0 1 2)","(0 1)(2 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1"],["1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}],["1/1",{"im":"-0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"},"1/1",{"im":"0.8660254037844386467637231708","re":"-0.5000000000000000000000000000"}],["3/1","0/1","-1/1","0/1"]],"name":"A4","schema_version":1})json"},
        {"F20", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4)","size":4},{"rep":"(1 2 4 3)","size":5},{"rep":"(1 4)(2 3)","size":5},{"rep":"(1 3 4 2)","size":5}],"group":{"degree":5,"generators":["(0 1 2 3 4)","(1 2 4 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1"],["1/1","1/1",{"im":"1.000000000000000000000000000","re":"0.0"},"-1/1",{"im":"-1.000000000000000000000000000","re":"0.0"}],["1/1","1/1","-1/1","1/1","-1/1"],["1/1","1/1",{"im":"-1.000000000000000000000000000","re":"0.0"},"-1/1",{"im":"1.000000000000000000000000000","re":"0.0"}],["4/1","-1/1","0/1","0/1","0/1"]],"name":"F20","schema_version":1})json"},
        {"S4", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1)","size":6},{"rep":"(0 1 2 3)","size":6},{"rep":"(1 2 3)","size":8},{"rep":"(0 2)(1 3)","size":3}],"group":{"degree":4,"generators":["(0 1)","(0 1 2 3)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1"],["1/1","-1/1","-1/1","1/1","1/1"],["2/1","0/1","0/1","-1/1","2/1"],["3/1","1/1","-1/1","0/1","-1/1"],["3/1","-1/1","1/1","0/1","-1/1"]],"name":"S4","schema_version":1})json"},
        {"A5", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 2 3 4)","size":12},{"rep":"(0 1 2)","size":20},{"rep":"(0 2 4 1 3)","size":12},{"rep":"(0 3)(1 4)","size":15}],"group":{"degree":5,"generators":["(0 1 2 3 4)","(0 1 2)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1"],["4/1","-1/1","1/1","-1/1","0/1"],["5/1","0/1","-1/1","0/1","1/1"],["3/1",{"im":"0.0","re":"1.618033988749894848204586834"},"0/1",{"im":"0.0","re":"-0.6180339887498948482045868344"},"-1/1"],["3/1",{"im":"0.0","re":"-0.6180339887498948482045868344"},"0/1",{"im":"0.0","re":"1.618033988749894848204586834"},"-1/1"]],"name":"A5","schema_version":1})json"},
        {"S5", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1)","size":10},{"rep":"(0 1 2 3 4)","size":24},{"rep":"(1 2 3 4)","size":30},{"rep":"(0 2 4)(1 3)","size":20},{"rep":"(1 3)(2 4)","size":15},{"rep":"(0 4 3)","size":20}],"group":{"degree":5,"generators":["(0 1)","(0 1 2 3 4)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1","1/1","1/1"],["1/1","-1/1","1/1","-1/1","-1/1","1/1","1/1"],["4/1","2/1","-1/1","0/1","-1/1","0/1","1/1"],["4/1","-2/1","-1/1","0/1","1/1","0/1","1/1"],["5/1","1/1","0/1","-1/1","1/1","1/1","-1/1"],["5/1","-1/1","0/1","1/1","-1/1","1/1","-1/1"],["6/1","0/1","1/1","0/1","0/1","-2/1","0/1"]],"name":"S5","schema_version":1})json"},
        {"GL32", R"json({"classes":[{"rep":"()","size":1},{"rep":"(0 1 3 2 5 6 4)","size":24},{"rep":"(3 4)(5 6)","size":21},{"rep":"(0 1 3)(2 5 4)","size":56},{"rep":"(0 2 4 3 6 1 5)","size":24},{"rep":"(0 2 4 6)(1 5)","size":42}],"group":{"degree":7,"generators":["(0 1 3 2 5 6 4)","(3 4)(5 6)"]},"irreducibles":[["1/1","1/1","1/1","1/1","1/1","1/1"],["3/1",{"im":"1.322875655532295295250807877","re":"-0.5000000000000000000000000000"},"-1/1","0/1",{"im":"-1.322875655532295295250807877","re":"-0.5000000000000000000000000000"},"1/1"],["3/1",{"im":"-1.322875655532295295250807877","re":"-0.5000000000000000000000000000"},"-1/1","0/1",{"im":"1.322875655532295295250807877","re":"-0.5000000000000000000000000000"},"1/1"],["6/1","-1/1","2/1","0/1","-1/1","0/1"],["7/1","0/1","-1/1","1/1","0/1","-1/1"],["8/1","1/1","0/1","-1/1","1/1","0/1"]],"name":"GL32","schema_version":1})json"},
    };
    return tables;
}

} // namespace homrep::fixtures_data

#endif
