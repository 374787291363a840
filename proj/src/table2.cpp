#include "lwd/table2.hpp"

namespace lwd {

namespace {

struct Entry {
    unsigned w;
    const char* count;
};

// (127,36) primitive BCH
constexpr Entry kBch36[] = {
    {31, "2667"},          {32, "8001"},          {35, "4572"},
    {36, "11684"},         {39, "640080"},        {40, "1408176"},
    {43, "12220956"},      {44, "23330916"},      {47, "132560568"},
    {48, "220934280"},     {51, "823921644"},     {52, "1204193172"},
    {55, "3157059472"},    {56, "4059076464"},    {59, "7022797740"},
    {60, "7959170772"},    {63, "9742066368"},    {64, "9742066368"},
    {67, "7959170772"},    {68, "7022797740"},    {71, "4059071892"},
    {72, "3157055916"},    {75, "1204193172"},    {76, "823921644"},
    {79, "217627200"},     {80, "130576320"},     {83, "23330916"},
    {84, "12220956"},      {87, "1408176"},       {88, "640080"},
};

// (127,43) primitive BCH
constexpr Entry kBch43[] = {
    {31, "31115"},         {32, "93345"},         {35, "2478024"},
    {36, "6332728"},       {39, "82356960"},      {40, "181185312"},
    {43, "1554145736"},    {44, "2967005496"},    {47, "16837453752"},
    {48, "28062422920"},   {51, "106485735720"},  {52, "155632998360"},
    {55, "400716792672"},  {56, "515207304864"},  {59, "905612814120"},
    {60, "1026361189336"}, {63, "1238334929472"}, {64, "1238334929472"},
    {67, "1026345592720"}, {68, "905599052400"},  {71, "515097101376"},
    {72, "400631078848"},  {75, "155191535184"},  {76, "106183681968"},
    {79, "26980367680"},   {80, "16188220608"},   {83, "1617588840"},
    {84, "847308440"},
};

// (127,50) primitive BCH
constexpr Entry kBch50[] = {
    {27, "40894"},             {28, "146050"},            {31, "4853051"},
    {32, "14559153"},          {35, "310454802"},         {36, "793384494"},
    {39, "10538703840"},       {40, "23185148448"},       {43, "199123183160"},
    {44, "380144258760"},      {47, "2154195406104"},     {48, "3590325676840"},
    {51, "13633106229288"},    {52, "19925309104344"},    {55, "51285782220204"},
    {56, "65938862854548"},    {59, "115927157830260"},   {60, "131384112207628"},
    {63, "158486906385472"},   {64, "158486906385472"},   {67, "131258388369668"},
    {68, "115816225032060"},   {71, "64917266933304"},    {72, "50491207614792"},
    {75, "15345182164032"},    {76, "10499335164864"},
};

// (127,64) punctured third-order Reed-Muller
constexpr Entry kRm64[] = {
    {15, "11811"},                 {16, "82677"},
    {23, "13889736"},              {24, "60188856"},
    {27, "684345088"},             {28, "2444089600"},
    {31, "77893639488"},           {32, "233680918464"},
    {35, "5097898213632"},         {36, "13027962101504"},
    {39, "172489249981440"},       {40, "379476349959168"},
    {43, "3259718804643840"},      {44, "6223099536138240"},
    {47, "35130035853803520"},     {48, "58550059756339200"},
    {51, "218602288622075904"},    {52, "319495652601495552"},
    {55, "766899891905495040"},    {56, "986014146735636480"},
    {59, "1306771964441395200"},   {60, "1481008226366914560"},
    {63, "258664522171023360"},    {64, "258664522171023360"},
};

struct Checksum {
    const char* id;
    std::size_t entries;
    const char* total;
};

// Frozen at transcription time: number of listed weights and the sum of all
// counts in the column.
constexpr Checksum kChecksums[] = {
    {"127_36", 30, "68713488684"},
    {"127_43", 28, "8791061727468"},
    {"127_50", 26, "1109754384311532"},
    {"127_64rm", 24, "5699854535203405720"},
};

WeightTally make_tally(const Entry* entries, std::size_t count, std::size_t n) {
    WeightTally t(n);
    for (std::size_t i = 0; i < count; ++i) t.set(entries[i].w, Count(entries[i].count));
    return t;
}

std::vector<Table2Column> build_columns() {
    std::vector<Table2Column> cols;
    cols.push_back({"127_36", "(127,36) BCH", 127, 36,
                    make_tally(kBch36, std::size(kBch36), 127)});
    cols.push_back({"127_43", "(127,43) BCH", 127, 43,
                    make_tally(kBch43, std::size(kBch43), 127)});
    cols.push_back({"127_50", "(127,50) BCH", 127, 50,
                    make_tally(kBch50, std::size(kBch50), 127)});
    cols.push_back({"127_64rm", "(127,64) punctured RM", 127, 64,
                    make_tally(kRm64, std::size(kRm64), 127)});
    return cols;
}

}  // namespace

const std::vector<Table2Column>& table2_columns() {
    static const std::vector<Table2Column> cols = build_columns();
    return cols;
}

const Table2Column& table2_column(const std::string& id) {
    for (const auto& c : table2_columns())
        if (c.id == id) return c;
    throw PreconditionError("unknown table column id: " + id);
}

RelationReport table2_transcription_check() {
    RelationReport report;
    for (const auto& col : table2_columns()) {
        const Checksum* expected = nullptr;
        for (const auto& c : kChecksums)
            if (col.id == c.id) expected = &c;
        if (!expected) {
            report.add("checksum[" + col.id + "]", false, "no frozen checksum");
            continue;
        }
        bool ok = col.lwd.entries().size() == expected->entries &&
                  col.lwd.total() == Count(expected->total);
        report.add("checksum[" + col.id + "]", ok,
                   ok ? "" : "entry count or total does not match the frozen checksum");
    }
    return report;
}

}  // namespace lwd
