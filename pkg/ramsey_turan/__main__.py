from ramsey_turan.cli import main

main()
