#include <iostream>

#include <coeffsharp/cli.hpp>

int main(int argc, char** argv)
{
    return coeffsharp::cli::run(argc, argv, std::cout, std::cerr);
}
