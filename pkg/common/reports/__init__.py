# Common report modules
