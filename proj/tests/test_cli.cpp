#include <doctest.h>

#include <cstdlib>
#include <string>

namespace {

const std::string kData = TWISTFORGE_DATA_DIR;
const std::string kCli = TWISTFORGE_CLI_PATH;

int cli(const std::string& args) {
    std::string cmd = "\"" + kCli + "\" " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("validate exit codes: 0 pass, 1 fail, 2 parse error") {
    CHECK(cli("validate \"" + kData + "/jordanian.json\"") == 0);
    CHECK(cli("validate \"" + kData + "/jordanian_ring.json\"") == 0);
    CHECK(cli("validate \"" + kData + "/non_associative.json\"") == 1);
    CHECK(cli("validate \"" + kData + "/bad_index.json\"") == 2);
    CHECK(cli("validate \"" + kData + "/no_such_file.json\"") == 2);
}

TEST_CASE("model exit codes and config guards") {
    CHECK(cli("model \"" + kData + "/jordanian.json\" --N 3 --D 3") == 0);
    CHECK(cli("model \"" + kData + "/jordanian.json\" --N 1") == 2);
    CHECK(cli("model \"" + kData + "/jordanian.json\" --D 1") == 2);
    CHECK(cli("model \"" + kData + "/jordanian.json\" --checks nope") == 2);
    CHECK(cli("model \"" + kData + "/jordanian.json\" --N 3 --D 3 --checks te,ybe") == 0);
    // a ring spec is not a Lie ring spec
    CHECK(cli("model \"" + kData + "/jordanian_ring.json\"") == 2);
}

TEST_CASE("twist exit codes") {
    std::string ring = "\"" + kData + "/jordanian_ring.json\"";
    CHECK(cli("twist " + ring + " --fusion \"" + kData + "/jordanian_phi11.json\" --N 3") == 0);
    CHECK(cli("twist " + ring + " --fusion \"" + kData + "/jordanian_phi11.json\" --N 3 --qt \"" +
              kData + "/trivial_qt.json\"") == 0);
    CHECK(cli("twist " + ring + " --seeds \"" + kData + "/good_seeds.json\" --N 3") == 0);
    CHECK(cli("twist " + ring + " --seeds \"" + kData + "/bad_seeds.json\" --N 3") == 2);
    CHECK(cli("twist " + ring + " --N 3") == 2);  // neither --fusion nor --seeds
}
