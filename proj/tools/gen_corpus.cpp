// Writes the sample webs and programs under the given directory.
#include "webcalc/builders.hpp"
#include "webcalc/ckm.hpp"
#include "webcalc/io.hpp"
#include "webcalc/tableau.hpp"

#include <iostream>
#include <string>

using namespace webcalc;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: webcalc_corpus DIR\n";
        return 2;
    }
    const std::string dir = argv[1];
    auto web = [&](const std::string& name, const WebGraph& g) {
        write_text_file(dir + "/" + name + ".json", web_to_json(g).dump(2) + "\n");
    };
    auto program = [&](const std::string& name, const Program& p) {
        write_text_file(dir + "/" + name + ".json", program_to_json(p).dump(2) + "\n");
    };

    web("cup_n2", make_cup_web(2, 1));
    web("cup_n4_k2", make_cup_web(4, 2));
    web("loop_n4_k2", make_loop_web(4, 2));
    web("tripod_n3_111", make_tripod_web(3, {1, 1, 1}));
    web("tripod_n4_332_in", make_tripod_web(4, {3, 3, 2}, true));
    web("running_sl4", make_running_sl4());
    web("two_cups_sl3", make_two_cups_sl3());

    TableauWeb tw = web_from_tableau(StandardTableau::from_word(4, "12132344"));
    web("tableau_12132344", tw.web);
    write_text_file(dir + "/tableau_12132344.stranding.json", stranding_to_json(tw.web, tw.stranding).dump(2) + "\n");

    program("program_cup_n3_k1", cup_program(3, 1));
    program("program_tripod_n4_121", tripod_program(4, 1, 2, 1));
    program("program_tripod_n4_323", tripod_program(4, 3, 2, 3));
    program("program_running_sl4", running_sl4_program());
    return 0;
}
