#include "focklat/surface.hpp"

#include "focklat/io.hpp"

namespace focklat {

ModelPtr preset_model(const std::string& name)
{
    if (name == "P2") {
        ExactMatrix g(1, 1);
        g.at(0, 0) = 1;
        return make_model("P2", std::move(g));
    }
    if (name == "P1xP1") {
        ExactMatrix g(2, 2);
        g.at(0, 1) = 1;
        g.at(1, 0) = 1;
        return make_model("P1xP1", std::move(g));
    }
    if (name == "P2-blown-up") {
        ExactMatrix g(2, 2);
        g.at(0, 0) = 1;
        g.at(1, 1) = -1;
        return make_model("P2-blown-up", std::move(g), 1);
    }
    return nullptr;
}

ModelPtr load_surface(const std::string& path_or_name)
{
    if (ModelPtr preset = preset_model(path_or_name))
        return preset;
    return model_from_json(load_json_file(path_or_name));
}

} // namespace focklat
