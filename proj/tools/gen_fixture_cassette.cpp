// Regenerates fixtures/toy/cassette.json by running the extraction and
// entity-recognition pipelines in record mode against scripted responses.
// Usage: gen_fixture_cassette <fixtures/toy directory>

#include "archtrace/artemis.hpp"
#include "archtrace/exarch.hpp"
#include "archtrace/gateway.hpp"
#include "archtrace/io.hpp"

#include <filesystem>
#include <iostream>

namespace {

constexpr const char* kElaboration =
    "The documentation describes a small desktop application split into two top-level "
    "components. The Gui component is responsible for rendering dialogs and windows and for "
    "collecting user input. The Logic component evaluates rules and formats results before "
    "they are handed back to the Gui for display.";

constexpr const char* kNameList = "- Gui\n- Logic";

constexpr const char* kRecognitionPlainText = R"(Component: Gui
Alternative names: GUI
Occurrences:
- The Gui component renders all dialogs and windows for the user.
- All user input flows from the Gui to the Logic component.
- Results are passed back to the Gui for display.
- A small bootstrap wires the Gui and the Logic together at startup.

Component: Logic
Alternative names: (none)
Occurrences:
- All user input flows from the Gui to the Logic component.
- The Logic component evaluates rules and formats the results.
- A small bootstrap wires the Gui and the Logic together at startup.)";

constexpr const char* kRecognitionJson = R"(```json
[
    {
        "name": "Gui",
        "type": "COMPONENT",
        "alternativeNames": ["GUI"],
        "occurrences": [
            "The Gui component renders all dialogs and windows for the user.",
            "All user input flows from the Gui to the Logic component.",
            "Results are passed back to the Gui for display.",
            "A small bootstrap wires the Gui and the Logic together at startup."
        ]
    },
    {
        "name": "Logic",
        "type": "COMPONENT",
        "alternativeNames": [],
        "occurrences": [
            "All user input flows from the Gui to the Logic component.",
            "The Logic component evaluates rules and formats the results.",
            "A small bootstrap wires the Gui and the Logic together at startup."
        ]
    }
]
```)";

std::string scripted_response(const archtrace::ChatRequest& request) {
    const std::string& last = request.messages.back().content;
    if (last.rfind("Your task is to identify the high-level components", 0) == 0) {
        return kElaboration;
    }
    if (last.rfind("Now provide a list", 0) == 0) {
        return kNameList;
    }
    if (last.rfind("Identify all architecturally relevant software components", 0) == 0) {
        return kRecognitionPlainText;
    }
    if (last.rfind("Given the last answer", 0) == 0) {
        return kRecognitionJson;
    }
    throw std::runtime_error("no scripted response for prompt: " + last.substr(0, 60));
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_fixture_cassette <fixtures/toy directory>\n";
        return 2;
    }
    const std::filesystem::path toy_dir = argv[1];
    try {
        archtrace::GatewayConfig config;
        config.mode = archtrace::LlmMode::Record;
        config.cassette_path = (toy_dir / "cassette.json").string();
        std::filesystem::remove(config.cassette_path);
        archtrace::LlmGateway gateway(config, scripted_response, nullptr);

        const archtrace::SadDocument sad = archtrace::load_sad(toy_dir / "sad.txt");
        const archtrace::ComponentNameList names =
            archtrace::extract_names_from_sad(sad, gateway);
        const archtrace::Sam sam = archtrace::build_simple_sam(names, sad.project);
        const archtrace::LinkSet links = archtrace::run_artemis(sad, sam, gateway);

        std::cout << "components:";
        for (const auto& component : sam.components) {
            std::cout << " " << component.id << "=" << component.name;
        }
        std::cout << "\nsad-sam links: " << links.size() << "\n";
        std::cout << "cassette entries: " << gateway.cassette().size() << "\n";
        std::cout << "wrote " << config.cassette_path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
