from affect2d.cli import main

main()
